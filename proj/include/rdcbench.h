/*
 * rdcbench — rate-distortion-complexity analysis of video codecs.
 *
 * C API for the shared library. All functions return rdcb_status; RDCB_OK
 * means success and anything else leaves a thread-local message retrievable
 * via rdcb_last_error(). Objects handed out as opaque pointers are owned by
 * the caller and released with the matching *_free function. Strings handed
 * out as char** are released with rdcb_string_free. Pointers returned by
 * accessor functions (names, messages) stay valid while the owning object
 * (or, for messages, the thread) lives and must not be freed.
 *
 * All operations are pure and reentrant; distinct objects may be used from
 * distinct threads freely.
 */

#ifndef RDCBENCH_H
#define RDCBENCH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdcb_status {
  RDCB_OK = 0,
  RDCB_ERR_INVALID_ARGUMENT = 1,
  RDCB_ERR_PARSE = 2,
  RDCB_ERR_INVARIANT = 3,
  RDCB_ERR_DUPLICATE_NAME = 4,
  RDCB_ERR_IO = 5,
  RDCB_ERR_DOMAIN = 6,
  RDCB_ERR_NO_OVERLAP = 7,
  RDCB_ERR_NON_MONOTONE = 8,
  RDCB_ERR_DEGENERATE_PROJECTION = 9,
  RDCB_ERR_DEGENERATE_CURVE = 10,
  RDCB_ERR_INTERNAL = 11
} rdcb_status;

const char* rdcb_status_name(rdcb_status status);

/* Message for the most recent failure on the calling thread. */
const char* rdcb_last_error(void);

const char* rdcb_version(void);

void rdcb_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Datasets                                                            */
/* ------------------------------------------------------------------ */

/* An immutable list of codecs, each an ordered set of (rate Mb/s,
 * MSE 8-bit, kMAC/pixel) operating points in curve or cloud mode. */
typedef struct rdcb_dataset rdcb_dataset;

enum { RDCB_MODE_CURVE = 0, RDCB_MODE_CLOUD = 1 };

rdcb_status rdcb_dataset_load(const char* path, rdcb_dataset** out);
rdcb_status rdcb_dataset_parse(const char* json_text, rdcb_dataset** out);
rdcb_status rdcb_dataset_save(const rdcb_dataset* ds, const char* path);
/* Keep only the named codecs, in dataset order. */
rdcb_status rdcb_dataset_select(const rdcb_dataset* ds, const char* const* names, size_t n_names,
                                rdcb_dataset** out);
void rdcb_dataset_free(rdcb_dataset* ds);

size_t rdcb_codec_count(const rdcb_dataset* ds);
const char* rdcb_codec_name(const rdcb_dataset* ds, size_t codec); /* NULL if out of range */
rdcb_status rdcb_codec_find(const rdcb_dataset* ds, const char* name, size_t* out_index);
rdcb_status rdcb_codec_mode(const rdcb_dataset* ds, size_t codec, int* out_mode);
size_t rdcb_codec_point_count(const rdcb_dataset* ds, size_t codec);
/* out_rdc = {rate_mbps, mse, kmac_per_pixel} */
rdcb_status rdcb_codec_point(const rdcb_dataset* ds, size_t codec, size_t point,
                             double out_rdc[3]);

/* ------------------------------------------------------------------ */
/* Ingestion                                                           */
/* ------------------------------------------------------------------ */

/* Validate + normalize a dataset document. Both outputs are optional. */
rdcb_status rdcb_ingest_dataset(const char* path, rdcb_dataset** out_ds, char** out_report_json);

/* Build one codec from raw measurement CSVs (one file per coding
 * instantiation). complexities holds n_complexities == 1 (replicated) or
 * n_paths values of decoder kMAC/pixel. */
rdcb_status rdcb_ingest_raw_csv(const char* const* csv_paths, size_t n_paths,
                                const double* complexities, size_t n_complexities,
                                const char* codec_name, int mode, rdcb_dataset** out_ds,
                                char** out_report_json);

typedef struct rdcb_raw_measurement {
  const char* sequence_id;
  long long width;
  long long height;
  double frame_rate;
  long long bit_depth; /* 8, 10 or 12 */
  double bits_per_pixel;
  double mse; /* native bit depth */
} rdcb_raw_measurement;

/* bits/pixel denormalized for 1920x1080 @ 30 Hz, in Mb/s. */
rdcb_status rdcb_normalize_rate(const rdcb_raw_measurement* m, double* out_mbps);
/* MSE rescaled to the 8-bit range: divided by 2^(2*(bit_depth-8)). */
rdcb_status rdcb_normalize_mse(const rdcb_raw_measurement* m, double* out_mse);
/* Mean normalized rate/MSE of one instantiation plus the supplied
 * complexity; out_rdc as in rdcb_codec_point. */
rdcb_status rdcb_aggregate(const rdcb_raw_measurement* measurements, size_t n,
                           double complexity_kmac, double out_rdc[3]);

/* ------------------------------------------------------------------ */
/* BD metrics                                                          */
/* ------------------------------------------------------------------ */

enum { RDCB_SCALE_MSE_DB = 0, RDCB_SCALE_LINEAR = 1 };
enum { RDCB_PLANE_RD = 0, RDCB_PLANE_RC = 1, RDCB_PLANE_DC = 2 };

double rdcb_mse_to_db(double mse);    /* NaN if mse <= 0 */
double rdcb_psnr_from_mse(double mse); /* NaN if mse <= 0 */

typedef struct rdcb_bd_result {
  double value; /* average ordinate difference over [t0, t1] */
  double t0;
  double t1;
  double theta; /* projection-line inclination, radians in [-pi/2, 0] */
  int plane;
  int distortion_scale;
} rdcb_bd_result;

/* Average ordinate difference of two interpolated point sets over their
 * abscissa overlap; xs/ys are parallel arrays. */
rdcb_status rdcb_bd_delta(const double* xa, const double* ya, size_t na, const double* xb,
                          const double* yb, size_t nb, rdcb_bd_result* out);

/* Delta in the direction theta = -arctan(lambda) on a coordinate plane of
 * the RDC volume. lambda may be HUGE_VAL (infinity); lambda = 0 and infinity
 * give the axis-oriented deltas (RD plane: dD_R and dR_D). */
rdcb_status rdcb_delta_3d(const rdcb_dataset* ds, const char* codec_a, const char* codec_b,
                          int plane, double lambda, int distortion_scale, rdcb_bd_result* out);

/* Conventional %-savings BD-rate (log10-rate ordinates). */
rdcb_status rdcb_bd_rate_percent(const rdcb_dataset* ds, const char* codec_a, const char* codec_b,
                                 int distortion_scale, double* out_percent);

/* Full report for the CLI: classic RD deltas, the requested plane's deltas,
 * optionally delta(lambda) (pass NaN to skip), conventional BD-rate. */
rdcb_status rdcb_bd_report_json(const rdcb_dataset* ds, const char* codec_a, const char* codec_b,
                                int distortion_scale, int plane, double lambda_or_nan,
                                char** out_json);

/* ------------------------------------------------------------------ */
/* RDC cost geometry                                                   */
/* ------------------------------------------------------------------ */

enum { RDCB_REDUCER_MIN = 0, RDCB_REDUCER_MEAN = 1 };
enum { RDCB_COST_CLOUD = 0, RDCB_COST_CURVE = 1 };

/* Distance from the point to the plane D + lambda R + gamma C = 0. */
rdcb_status rdcb_plane_distance(const double rdc[3], double lambda, double gamma, double* out);
/* Orthogonal projection onto the plane; out may have negative coords. */
rdcb_status rdcb_project_onto_plane(const double rdc[3], double lambda, double gamma,
                                    double out_rdc[3]);
/* Dot product of a cost vector with an importance vector. */
rdcb_status rdcb_linear_cost(const double* s, const double* u, size_t k, double* out);

/* Projected-arc-length-weighted average plane distance of a curve-mode
 * codec. Pass seg_* = NULL to skip the per-segment breakdown; otherwise
 * *inout_seg_count holds the capacity in and the segment count out. */
rdcb_status rdcb_curve_cost(const rdcb_dataset* ds, size_t codec, double lambda, double gamma,
                            double* out_total, double* seg_lengths, double* seg_mean_distances,
                            size_t* inout_seg_count);

/* Per-point Lagrangian d + lambda r + gamma c reduced by min or mean. */
rdcb_status rdcb_cloud_cost(const rdcb_dataset* ds, size_t codec, double lambda, double gamma,
                            int reducer, double* out);

rdcb_status rdcb_cost_report_json(const rdcb_dataset* ds, const char* const* codec_names,
                                  size_t n_names, double lambda, double gamma, int reducer,
                                  int cost_kind_or_minus1, char** out_json);

/* ------------------------------------------------------------------ */
/* Application calculator                                              */
/* ------------------------------------------------------------------ */

typedef struct rdcb_app_model {
  double n_users;
  double hours;              /* hours of video per user */
  double energy_price;       /* currency/kWh */
  double data_price;         /* currency/GB */
  double gpu_cost;           /* currency per decoding unit */
  double gpu_capacity;       /* kMAC/pixel one unit sustains */
  double gpu_power;          /* kW */
  double ref_complexity;     /* kMAC/pixel */
  double ref_rate;           /* Mb/s */
  double revenue_multiplier; /* >= 1 */
  double psnr_full;          /* dB, all users subscribe */
  double psnr_none;          /* dB, all users leave */
} rdcb_app_model;

typedef struct rdcb_app_point {
  double lambda; /* alpha2/alpha1 */
  double gamma;  /* alpha3/alpha1 */
  double alpha1; /* currency per unit MSE */
  double alpha2; /* currency per Mb/s */
  double alpha3; /* currency per kMAC/pixel */
  double hw_per_kmac;
  double energy_per_kmac_hour;
  double gb_per_mbps;
  double operating_ref;
  double revenue;
  double delta_mse;
} rdcb_app_point;

rdcb_status rdcb_app_model_load(const char* path, rdcb_app_model* out);
/* paper_rounding != 0 reproduces the worked example's printed intermediate
 * rounding; 0 carries full precision throughout. */
rdcb_status rdcb_app_calculator(const rdcb_app_model* model, int paper_rounding,
                                rdcb_app_point* out);
rdcb_status rdcb_app_point_json(const rdcb_app_point* point, int paper_rounding, char** out_json);

/* ------------------------------------------------------------------ */
/* Application-space grids                                             */
/* ------------------------------------------------------------------ */

/* Per-codec cost surfaces over a dB-spaced (lambda, gamma) lattice plus the
 * per-cell argmin map (ties to the lowest codec index). */
typedef struct rdcb_grid rdcb_grid;

typedef struct rdcb_grid_spec {
  double lambda_db_lo;
  double lambda_db_hi;
  double lambda_db_step;
  double gamma_db_lo;
  double gamma_db_hi;
  double gamma_db_step;
} rdcb_grid_spec;

/* The default lattice: lambda 10log10 in [-20, 40], gamma in [-30, 30],
 * step 0.5 dB. */
void rdcb_grid_spec_default(rdcb_grid_spec* out);

/* Evaluate every codec at every cell. threads = 0 picks a default; the
 * result is bit-identical for any thread count. */
rdcb_status rdcb_cost_surface(const rdcb_dataset* ds, const rdcb_grid_spec* spec, int reducer,
                              int cost_kind, unsigned threads, rdcb_grid** out);
void rdcb_grid_free(rdcb_grid* grid);

size_t rdcb_grid_lambda_count(const rdcb_grid* grid);
size_t rdcb_grid_gamma_count(const rdcb_grid* grid);
rdcb_status rdcb_grid_lambda_db(const rdcb_grid* grid, size_t i, double* out);
rdcb_status rdcb_grid_gamma_db(const rdcb_grid* grid, size_t i, double* out);
size_t rdcb_grid_codec_count(const rdcb_grid* grid);
const char* rdcb_grid_codec_name(const rdcb_grid* grid, size_t codec);
/* Linear-domain cost of one codec at cell (gamma_idx, lambda_idx). */
rdcb_status rdcb_grid_cost(const rdcb_grid* grid, size_t codec, size_t gamma_idx,
                           size_t lambda_idx, double* out);
rdcb_status rdcb_grid_best(const rdcb_grid* grid, size_t gamma_idx, size_t lambda_idx,
                           size_t* out_codec);

/* Deterministic artifact writers. CSV matrices put the lambda axis (dB) in
 * the first row and the gamma axis (dB) in the first column; surface and
 * difference values are in dB with -inf as the reserved zero-cost token
 * (null in JSON). Heatmaps are self-contained SVG documents. */
rdcb_status rdcb_grid_write_surface_csv(const rdcb_grid* grid, size_t codec, const char* path);
rdcb_status rdcb_grid_write_surface_svg(const rdcb_grid* grid, size_t codec, const char* path);
rdcb_status rdcb_grid_write_difference_csv(const rdcb_grid* grid, size_t codec_a, size_t codec_b,
                                           const char* path);
rdcb_status rdcb_grid_write_difference_json(const rdcb_grid* grid, size_t codec_a, size_t codec_b,
                                            const char* path);
rdcb_status rdcb_grid_write_difference_svg(const rdcb_grid* grid, size_t codec_a, size_t codec_b,
                                           const char* path);
rdcb_status rdcb_grid_write_best_map_csv(const rdcb_grid* grid, const char* path);
rdcb_status rdcb_grid_write_best_map_json(const rdcb_grid* grid, const char* path);
/* mark_lambda_gamma: NULL or {lambda, gamma} in linear units, drawn at its
 * 10log10 position when inside the axes. */
rdcb_status rdcb_grid_write_best_map_svg(const rdcb_grid* grid, const char* path,
                                         const double* mark_lambda_gamma);
/* The whole grid (axes, metadata, dB surfaces, best map) as one document. */
rdcb_status rdcb_grid_write_json(const rdcb_grid* grid, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RDCBENCH_H */
