#include "rdcbench.h"

#include <cmath>
#include <cstring>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "appspace.hpp"
#include "bd.hpp"
#include "cost.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "ingest.hpp"
#include "json_io.hpp"
#include "report.hpp"

struct rdcb_dataset {
  std::vector<rdc::CodecDataset> codecs;
};

struct rdcb_grid {
  rdc::AppSpaceGrid grid;
};

namespace {

thread_local std::string g_last_error;

void set_error(rdcb_status, const std::string& message) { g_last_error = message; }

rdcb_status status_of(rdc::ErrorKind kind) {
  using rdc::ErrorKind;
  switch (kind) {
    case ErrorKind::invalid_argument: return RDCB_ERR_INVALID_ARGUMENT;
    case ErrorKind::parse: return RDCB_ERR_PARSE;
    case ErrorKind::invariant: return RDCB_ERR_INVARIANT;
    case ErrorKind::duplicate_name: return RDCB_ERR_DUPLICATE_NAME;
    case ErrorKind::io: return RDCB_ERR_IO;
    case ErrorKind::domain: return RDCB_ERR_DOMAIN;
    case ErrorKind::no_overlap: return RDCB_ERR_NO_OVERLAP;
    case ErrorKind::non_monotone: return RDCB_ERR_NON_MONOTONE;
    case ErrorKind::degenerate_projection: return RDCB_ERR_DEGENERATE_PROJECTION;
    case ErrorKind::degenerate_curve: return RDCB_ERR_DEGENERATE_CURVE;
    case ErrorKind::internal: return RDCB_ERR_INTERNAL;
  }
  return RDCB_ERR_INTERNAL;
}

// Every entry point funnels through here: exceptions become status codes
// plus a thread-local message.
template <class Fn>
rdcb_status guarded(Fn&& fn) {
  try {
    fn();
    return RDCB_OK;
  } catch (const rdc::Error& e) {
    const rdcb_status s = status_of(e.kind());
    set_error(s, e.what());
    return s;
  } catch (const std::bad_alloc&) {
    set_error(RDCB_ERR_INTERNAL, "out of memory");
    return RDCB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(RDCB_ERR_INTERNAL, e.what());
    return RDCB_ERR_INTERNAL;
  }
}

rdcb_status require(bool ok, const char* message) {
  if (ok) return RDCB_OK;
  set_error(RDCB_ERR_INVALID_ARGUMENT, message);
  return RDCB_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rdc::DatasetMode mode_from_int(int mode) {
  if (mode == RDCB_MODE_CURVE) return rdc::DatasetMode::curve;
  if (mode == RDCB_MODE_CLOUD) return rdc::DatasetMode::cloud;
  rdc::fail(rdc::ErrorKind::invalid_argument, "bad mode constant " + std::to_string(mode));
}

rdc::DistortionScale scale_from_int(int scale) {
  if (scale == RDCB_SCALE_MSE_DB) return rdc::DistortionScale::mse_db;
  if (scale == RDCB_SCALE_LINEAR) return rdc::DistortionScale::linear_mse;
  rdc::fail(rdc::ErrorKind::invalid_argument,
            "bad distortion scale constant " + std::to_string(scale));
}

rdc::Plane plane_from_int(int plane) {
  switch (plane) {
    case RDCB_PLANE_RD: return rdc::Plane::rd;
    case RDCB_PLANE_RC: return rdc::Plane::rc;
    case RDCB_PLANE_DC: return rdc::Plane::dc;
    default:
      rdc::fail(rdc::ErrorKind::invalid_argument, "bad plane constant " + std::to_string(plane));
  }
}

rdc::Reducer reducer_from_int(int reducer) {
  if (reducer == RDCB_REDUCER_MIN) return rdc::Reducer::min;
  if (reducer == RDCB_REDUCER_MEAN) return rdc::Reducer::mean;
  rdc::fail(rdc::ErrorKind::invalid_argument, "bad reducer constant " + std::to_string(reducer));
}

rdc::CostKind cost_kind_from_int(int kind) {
  if (kind == RDCB_COST_CLOUD) return rdc::CostKind::cloud;
  if (kind == RDCB_COST_CURVE) return rdc::CostKind::curve;
  rdc::fail(rdc::ErrorKind::invalid_argument, "bad cost kind constant " + std::to_string(kind));
}

rdc::RawMeasurement measurement_from_c(const rdcb_raw_measurement& m) {
  rdc::RawMeasurement out;
  out.sequence_id = m.sequence_id ? m.sequence_id : "";
  out.width = m.width;
  out.height = m.height;
  out.frame_rate = m.frame_rate;
  out.bit_depth = m.bit_depth;
  out.bits_per_pixel = m.bits_per_pixel;
  out.mse = m.mse;
  return out;
}

rdc::RdcPoint point_from_c(const double rdc_values[3], const char* what) {
  rdc::RdcPoint p{rdc_values[0], rdc_values[1], rdc_values[2]};
  rdc::validate(p, what);
  return p;
}

rdc::ApplicationModel model_from_c(const rdcb_app_model& m) {
  rdc::ApplicationModel out;
  out.n_users = m.n_users;
  out.hours = m.hours;
  out.energy_price = m.energy_price;
  out.data_price = m.data_price;
  out.gpu_cost = m.gpu_cost;
  out.gpu_capacity = m.gpu_capacity;
  out.gpu_power = m.gpu_power;
  out.ref_complexity = m.ref_complexity;
  out.ref_rate = m.ref_rate;
  out.revenue_multiplier = m.revenue_multiplier;
  out.psnr_full = m.psnr_full;
  out.psnr_none = m.psnr_none;
  return out;
}

rdcb_app_point point_to_c(const rdc::AppPoint& p) {
  rdcb_app_point out;
  out.lambda = p.lambda;
  out.gamma = p.gamma;
  out.alpha1 = p.alpha1;
  out.alpha2 = p.alpha2;
  out.alpha3 = p.alpha3;
  out.hw_per_kmac = p.hw_per_kmac;
  out.energy_per_kmac_hour = p.energy_per_kmac_hour;
  out.gb_per_mbps = p.gb_per_mbps;
  out.operating_ref = p.operating_ref;
  out.revenue = p.revenue;
  out.delta_mse = p.delta_mse;
  return out;
}

rdc::AppPoint point_from_c(const rdcb_app_point& p, bool paper_rounding) {
  rdc::AppPoint out;
  out.lambda = p.lambda;
  out.gamma = p.gamma;
  out.alpha1 = p.alpha1;
  out.alpha2 = p.alpha2;
  out.alpha3 = p.alpha3;
  out.hw_per_kmac = p.hw_per_kmac;
  out.energy_per_kmac_hour = p.energy_per_kmac_hour;
  out.gb_per_mbps = p.gb_per_mbps;
  out.operating_ref = p.operating_ref;
  out.revenue = p.revenue;
  out.delta_mse = p.delta_mse;
  out.paper_rounding = paper_rounding;
  return out;
}

rdcb_bd_result bd_result_to_c(const rdc::BdResult& r) {
  rdcb_bd_result out;
  out.value = r.value;
  out.t0 = r.t0;
  out.t1 = r.t1;
  out.theta = r.axis_spec.theta;
  out.plane = r.axis_spec.plane == rdc::Plane::rd
                  ? RDCB_PLANE_RD
                  : (r.axis_spec.plane == rdc::Plane::rc ? RDCB_PLANE_RC : RDCB_PLANE_DC);
  out.distortion_scale = r.axis_spec.distortion_scale == rdc::DistortionScale::mse_db
                             ? RDCB_SCALE_MSE_DB
                             : RDCB_SCALE_LINEAR;
  return out;
}

const rdc::CodecDataset& codec_at(const rdcb_dataset& ds, size_t codec) {
  if (codec >= ds.codecs.size()) {
    rdc::fail(rdc::ErrorKind::invalid_argument,
              "codec index " + std::to_string(codec) + " out of range");
  }
  return ds.codecs[codec];
}

}  // namespace

extern "C" {

const char* rdcb_status_name(rdcb_status status) {
  switch (status) {
    case RDCB_OK: return "ok";
    case RDCB_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case RDCB_ERR_PARSE: return "parse";
    case RDCB_ERR_INVARIANT: return "invariant";
    case RDCB_ERR_DUPLICATE_NAME: return "duplicate-name";
    case RDCB_ERR_IO: return "io";
    case RDCB_ERR_DOMAIN: return "domain";
    case RDCB_ERR_NO_OVERLAP: return "no-overlap";
    case RDCB_ERR_NON_MONOTONE: return "non-monotone";
    case RDCB_ERR_DEGENERATE_PROJECTION: return "degenerate-projection";
    case RDCB_ERR_DEGENERATE_CURVE: return "degenerate-curve";
    case RDCB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rdcb_last_error(void) { return g_last_error.c_str(); }

const char* rdcb_version(void) { return "1.0.0"; }

void rdcb_string_free(char* s) { delete[] s; }

/* datasets */

rdcb_status rdcb_dataset_load(const char* path, rdcb_dataset** out) {
  if (auto s = require(path && out, "rdcb_dataset_load: null argument")) return s;
  return guarded([&] { *out = new rdcb_dataset{rdc::load_dataset(path)}; });
}

rdcb_status rdcb_dataset_parse(const char* json_text, rdcb_dataset** out) {
  if (auto s = require(json_text && out, "rdcb_dataset_parse: null argument")) return s;
  return guarded([&] { *out = new rdcb_dataset{rdc::parse_dataset(json_text, "<string>")}; });
}

rdcb_status rdcb_dataset_save(const rdcb_dataset* ds, const char* path) {
  if (auto s = require(ds && path, "rdcb_dataset_save: null argument")) return s;
  return guarded([&] { rdc::save_dataset(ds->codecs, path); });
}

rdcb_status rdcb_dataset_select(const rdcb_dataset* ds, const char* const* names, size_t n_names,
                                rdcb_dataset** out) {
  if (auto s = require(ds && out && (names || n_names == 0),
                       "rdcb_dataset_select: null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<rdc::CodecDataset> selected;
    for (size_t i = 0; i < n_names; ++i) {
      rdc::find_codec(ds->codecs, names[i]);  // existence check with message
    }
    for (const rdc::CodecDataset& c : ds->codecs) {
      for (size_t i = 0; i < n_names; ++i) {
        if (c.name() == names[i]) {
          selected.push_back(c);
          break;
        }
      }
    }
    *out = new rdcb_dataset{std::move(selected)};
  });
}

void rdcb_dataset_free(rdcb_dataset* ds) { delete ds; }

size_t rdcb_codec_count(const rdcb_dataset* ds) { return ds ? ds->codecs.size() : 0; }

const char* rdcb_codec_name(const rdcb_dataset* ds, size_t codec) {
  if (!ds || codec >= ds->codecs.size()) return nullptr;
  return ds->codecs[codec].name().c_str();
}

rdcb_status rdcb_codec_find(const rdcb_dataset* ds, const char* name, size_t* out_index) {
  if (auto s = require(ds && name && out_index, "rdcb_codec_find: null argument")) return s;
  return guarded([&] {
    for (size_t i = 0; i < ds->codecs.size(); ++i) {
      if (ds->codecs[i].name() == name) {
        *out_index = i;
        return;
      }
    }
    rdc::fail(rdc::ErrorKind::invalid_argument, "unknown codec \"" + std::string(name) + "\"");
  });
}

rdcb_status rdcb_codec_mode(const rdcb_dataset* ds, size_t codec, int* out_mode) {
  if (auto s = require(ds && out_mode, "rdcb_codec_mode: null argument")) return s;
  return guarded([&] {
    *out_mode = codec_at(*ds, codec).mode() == rdc::DatasetMode::curve ? RDCB_MODE_CURVE
                                                                       : RDCB_MODE_CLOUD;
  });
}

size_t rdcb_codec_point_count(const rdcb_dataset* ds, size_t codec) {
  if (!ds || codec >= ds->codecs.size()) return 0;
  return ds->codecs[codec].points().size();
}

rdcb_status rdcb_codec_point(const rdcb_dataset* ds, size_t codec, size_t point,
                             double out_rdc[3]) {
  if (auto s = require(ds && out_rdc, "rdcb_codec_point: null argument")) return s;
  return guarded([&] {
    const rdc::CodecDataset& c = codec_at(*ds, codec);
    if (point >= c.points().size()) {
      rdc::fail(rdc::ErrorKind::invalid_argument,
                "point index " + std::to_string(point) + " out of range");
    }
    const rdc::RdcPoint& p = c.points()[point];
    out_rdc[0] = p.rate;
    out_rdc[1] = p.distortion;
    out_rdc[2] = p.complexity;
  });
}

/* ingestion */

rdcb_status rdcb_ingest_dataset(const char* path, rdcb_dataset** out_ds, char** out_report_json) {
  if (auto s = require(path != nullptr, "rdcb_ingest_dataset: null path")) return s;
  return guarded([&] {
    rdc::IngestResult result = rdc::ingest_dataset_file(path);
    if (out_report_json) {
      *out_report_json = dup_string(rdc::ingest_report_to_json(result.report));
    }
    if (out_ds) *out_ds = new rdcb_dataset{std::move(result.codecs)};
  });
}

rdcb_status rdcb_ingest_raw_csv(const char* const* csv_paths, size_t n_paths,
                                const double* complexities, size_t n_complexities,
                                const char* codec_name, int mode, rdcb_dataset** out_ds,
                                char** out_report_json) {
  if (auto s = require(csv_paths && complexities && codec_name,
                       "rdcb_ingest_raw_csv: null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<std::string> paths(csv_paths, csv_paths + n_paths);
    std::vector<double> kmacs(complexities, complexities + n_complexities);
    rdc::IngestResult result =
        rdc::ingest_raw_csv(paths, kmacs, codec_name, mode_from_int(mode));
    if (out_report_json) {
      *out_report_json = dup_string(rdc::ingest_report_to_json(result.report));
    }
    if (out_ds) *out_ds = new rdcb_dataset{std::move(result.codecs)};
  });
}

rdcb_status rdcb_normalize_rate(const rdcb_raw_measurement* m, double* out_mbps) {
  if (auto s = require(m && out_mbps, "rdcb_normalize_rate: null argument")) return s;
  return guarded([&] { *out_mbps = rdc::normalize_rate(measurement_from_c(*m)); });
}

rdcb_status rdcb_normalize_mse(const rdcb_raw_measurement* m, double* out_mse) {
  if (auto s = require(m && out_mse, "rdcb_normalize_mse: null argument")) return s;
  return guarded([&] { *out_mse = rdc::normalize_mse(measurement_from_c(*m)); });
}

rdcb_status rdcb_aggregate(const rdcb_raw_measurement* measurements, size_t n,
                           double complexity_kmac, double out_rdc[3]) {
  if (auto s = require(measurements && out_rdc, "rdcb_aggregate: null argument")) return s;
  return guarded([&] {
    std::vector<rdc::RawMeasurement> ms;
    ms.reserve(n);
    for (size_t i = 0; i < n; ++i) ms.push_back(measurement_from_c(measurements[i]));
    const rdc::RdcPoint p = rdc::aggregate(ms, complexity_kmac);
    out_rdc[0] = p.rate;
    out_rdc[1] = p.distortion;
    out_rdc[2] = p.complexity;
  });
}

/* BD metrics */

double rdcb_mse_to_db(double mse) {
  double out = std::nan("");
  guarded([&] { out = rdc::mse_to_db(mse); });
  return out;
}

double rdcb_psnr_from_mse(double mse) {
  double out = std::nan("");
  guarded([&] { out = rdc::psnr_from_mse(mse); });
  return out;
}

rdcb_status rdcb_bd_delta(const double* xa, const double* ya, size_t na, const double* xb,
                          const double* yb, size_t nb, rdcb_bd_result* out) {
  if (auto s = require(xa && ya && xb && yb && out, "rdcb_bd_delta: null argument")) return s;
  return guarded([&] {
    std::vector<rdc::Point2> a, b;
    a.reserve(na);
    b.reserve(nb);
    for (size_t i = 0; i < na; ++i) a.emplace_back(xa[i], ya[i]);
    for (size_t i = 0; i < nb; ++i) b.emplace_back(xb[i], yb[i]);
    *out = bd_result_to_c(rdc::bd_delta(a, b));
  });
}

rdcb_status rdcb_delta_3d(const rdcb_dataset* ds, const char* codec_a, const char* codec_b,
                          int plane, double lambda, int distortion_scale, rdcb_bd_result* out) {
  if (auto s = require(ds && codec_a && codec_b && out, "rdcb_delta_3d: null argument")) return s;
  return guarded([&] {
    const rdc::CodecDataset& a = rdc::find_codec(ds->codecs, codec_a);
    const rdc::CodecDataset& b = rdc::find_codec(ds->codecs, codec_b);
    *out = bd_result_to_c(
        rdc::delta_3d(a, b, plane_from_int(plane), lambda, scale_from_int(distortion_scale)));
  });
}

rdcb_status rdcb_bd_rate_percent(const rdcb_dataset* ds, const char* codec_a, const char* codec_b,
                                 int distortion_scale, double* out_percent) {
  if (auto s = require(ds && codec_a && codec_b && out_percent,
                       "rdcb_bd_rate_percent: null argument")) {
    return s;
  }
  return guarded([&] {
    const rdc::CodecDataset& a = rdc::find_codec(ds->codecs, codec_a);
    const rdc::CodecDataset& b = rdc::find_codec(ds->codecs, codec_b);
    *out_percent = rdc::bd_rate_percent(a, b, scale_from_int(distortion_scale));
  });
}

rdcb_status rdcb_bd_report_json(const rdcb_dataset* ds, const char* codec_a, const char* codec_b,
                                int distortion_scale, int plane, double lambda_or_nan,
                                char** out_json) {
  if (auto s = require(ds && codec_a && codec_b && out_json,
                       "rdcb_bd_report_json: null argument")) {
    return s;
  }
  return guarded([&] {
    std::optional<double> lambda;
    if (!std::isnan(lambda_or_nan)) lambda = lambda_or_nan;
    *out_json = dup_string(rdc::bd_report_json(ds->codecs, codec_a, codec_b,
                                               scale_from_int(distortion_scale),
                                               plane_from_int(plane), lambda));
  });
}

/* cost geometry */

rdcb_status rdcb_plane_distance(const double rdc_values[3], double lambda, double gamma,
                                double* out) {
  if (auto s = require(rdc_values && out, "rdcb_plane_distance: null argument")) return s;
  return guarded([&] {
    *out = rdc::plane_distance(point_from_c(rdc_values, "plane_distance input"),
                               rdc::CostPlane(lambda, gamma));
  });
}

rdcb_status rdcb_project_onto_plane(const double rdc_values[3], double lambda, double gamma,
                                    double out_rdc[3]) {
  if (auto s = require(rdc_values && out_rdc, "rdcb_project_onto_plane: null argument")) return s;
  return guarded([&] {
    const rdc::RdcPoint p = rdc::project_onto_plane(
        point_from_c(rdc_values, "project_onto_plane input"), rdc::CostPlane(lambda, gamma));
    out_rdc[0] = p.rate;
    out_rdc[1] = p.distortion;
    out_rdc[2] = p.complexity;
  });
}

rdcb_status rdcb_linear_cost(const double* s, const double* u, size_t k, double* out) {
  if (auto st = require(s && u && out, "rdcb_linear_cost: null argument")) return st;
  return guarded([&] {
    *out = rdc::linear_cost(std::span<const double>(s, k), std::span<const double>(u, k));
  });
}

rdcb_status rdcb_curve_cost(const rdcb_dataset* ds, size_t codec, double lambda, double gamma,
                            double* out_total, double* seg_lengths, double* seg_mean_distances,
                            size_t* inout_seg_count) {
  if (auto s = require(ds && out_total, "rdcb_curve_cost: null argument")) return s;
  if (auto s = require(!(seg_lengths || seg_mean_distances) || inout_seg_count,
                       "rdcb_curve_cost: segment buffers need inout_seg_count")) {
    return s;
  }
  return guarded([&] {
    const rdc::CurveCostBreakdown breakdown =
        rdc::curve_cost(codec_at(*ds, codec), rdc::CostPlane(lambda, gamma));
    *out_total = breakdown.total;
    if (inout_seg_count) {
      const size_t capacity = *inout_seg_count;
      *inout_seg_count = breakdown.per_segment.size();
      if (seg_lengths || seg_mean_distances) {
        if (capacity < breakdown.per_segment.size()) {
          rdc::fail(rdc::ErrorKind::invalid_argument,
                    "segment buffer too small: need " +
                        std::to_string(breakdown.per_segment.size()));
        }
        for (size_t i = 0; i < breakdown.per_segment.size(); ++i) {
          if (seg_lengths) seg_lengths[i] = breakdown.per_segment[i].length;
          if (seg_mean_distances) seg_mean_distances[i] = breakdown.per_segment[i].mean_distance;
        }
      }
    }
  });
}

rdcb_status rdcb_cloud_cost(const rdcb_dataset* ds, size_t codec, double lambda, double gamma,
                            int reducer, double* out) {
  if (auto s = require(ds && out, "rdcb_cloud_cost: null argument")) return s;
  return guarded([&] {
    *out = rdc::cloud_cost(codec_at(*ds, codec), rdc::CostPlane(lambda, gamma),
                           reducer_from_int(reducer));
  });
}

rdcb_status rdcb_cost_report_json(const rdcb_dataset* ds, const char* const* codec_names,
                                  size_t n_names, double lambda, double gamma, int reducer,
                                  int cost_kind_or_minus1, char** out_json) {
  if (auto s = require(ds && out_json && (codec_names || n_names == 0),
                       "rdcb_cost_report_json: null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<std::string> subset;
    for (size_t i = 0; i < n_names; ++i) subset.emplace_back(codec_names[i]);
    std::optional<rdc::CostKind> kind;
    if (cost_kind_or_minus1 >= 0) kind = cost_kind_from_int(cost_kind_or_minus1);
    *out_json = dup_string(rdc::cost_report_json(ds->codecs, subset, lambda, gamma,
                                                 reducer_from_int(reducer), kind, nullptr));
  });
}

/* application calculator */

rdcb_status rdcb_app_model_load(const char* path, rdcb_app_model* out) {
  if (auto s = require(path && out, "rdcb_app_model_load: null argument")) return s;
  return guarded([&] {
    const rdc::ApplicationModel m = rdc::load_app_model(path);
    *out = rdcb_app_model{m.n_users,       m.hours,    m.energy_price,       m.data_price,
                          m.gpu_cost,      m.gpu_capacity, m.gpu_power,      m.ref_complexity,
                          m.ref_rate,      m.revenue_multiplier, m.psnr_full, m.psnr_none};
  });
}

rdcb_status rdcb_app_calculator(const rdcb_app_model* model, int paper_rounding,
                                rdcb_app_point* out) {
  if (auto s = require(model && out, "rdcb_app_calculator: null argument")) return s;
  return guarded([&] {
    *out = point_to_c(rdc::app_calculator(model_from_c(*model), paper_rounding != 0));
  });
}

rdcb_status rdcb_app_point_json(const rdcb_app_point* point, int paper_rounding,
                                char** out_json) {
  if (auto s = require(point && out_json, "rdcb_app_point_json: null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(rdc::app_point_to_json(point_from_c(*point, paper_rounding != 0)));
  });
}

/* grids */

void rdcb_grid_spec_default(rdcb_grid_spec* out) {
  if (!out) return;
  const rdc::GridSpec d;
  out->lambda_db_lo = d.lambda_db_lo;
  out->lambda_db_hi = d.lambda_db_hi;
  out->lambda_db_step = d.lambda_db_step;
  out->gamma_db_lo = d.gamma_db_lo;
  out->gamma_db_hi = d.gamma_db_hi;
  out->gamma_db_step = d.gamma_db_step;
}

rdcb_status rdcb_cost_surface(const rdcb_dataset* ds, const rdcb_grid_spec* spec, int reducer,
                              int cost_kind, unsigned threads, rdcb_grid** out) {
  if (auto s = require(ds && spec && out, "rdcb_cost_surface: null argument")) return s;
  return guarded([&] {
    rdc::GridSpec gs;
    gs.lambda_db_lo = spec->lambda_db_lo;
    gs.lambda_db_hi = spec->lambda_db_hi;
    gs.lambda_db_step = spec->lambda_db_step;
    gs.gamma_db_lo = spec->gamma_db_lo;
    gs.gamma_db_hi = spec->gamma_db_hi;
    gs.gamma_db_step = spec->gamma_db_step;
    *out = new rdcb_grid{rdc::cost_surface(ds->codecs, gs, reducer_from_int(reducer),
                                           cost_kind_from_int(cost_kind), threads)};
  });
}

void rdcb_grid_free(rdcb_grid* grid) { delete grid; }

size_t rdcb_grid_lambda_count(const rdcb_grid* grid) {
  return grid ? grid->grid.lambda_db_axis.size() : 0;
}

size_t rdcb_grid_gamma_count(const rdcb_grid* grid) {
  return grid ? grid->grid.gamma_db_axis.size() : 0;
}

rdcb_status rdcb_grid_lambda_db(const rdcb_grid* grid, size_t i, double* out) {
  if (auto s = require(grid && out && i < grid->grid.lambda_db_axis.size(),
                       "rdcb_grid_lambda_db: bad argument")) {
    return s;
  }
  *out = grid->grid.lambda_db_axis[i];
  return RDCB_OK;
}

rdcb_status rdcb_grid_gamma_db(const rdcb_grid* grid, size_t i, double* out) {
  if (auto s = require(grid && out && i < grid->grid.gamma_db_axis.size(),
                       "rdcb_grid_gamma_db: bad argument")) {
    return s;
  }
  *out = grid->grid.gamma_db_axis[i];
  return RDCB_OK;
}

size_t rdcb_grid_codec_count(const rdcb_grid* grid) {
  return grid ? grid->grid.codec_names.size() : 0;
}

const char* rdcb_grid_codec_name(const rdcb_grid* grid, size_t codec) {
  if (!grid || codec >= grid->grid.codec_names.size()) return nullptr;
  return grid->grid.codec_names[codec].c_str();
}

rdcb_status rdcb_grid_cost(const rdcb_grid* grid, size_t codec, size_t gamma_idx,
                           size_t lambda_idx, double* out) {
  if (auto s = require(grid && out, "rdcb_grid_cost: null argument")) return s;
  return guarded([&] {
    if (codec >= grid->grid.cost_surfaces.size() ||
        gamma_idx >= grid->grid.gamma_db_axis.size() ||
        lambda_idx >= grid->grid.lambda_db_axis.size()) {
      rdc::fail(rdc::ErrorKind::invalid_argument, "rdcb_grid_cost: index out of range");
    }
    *out = grid->grid.cost_surfaces[codec].at(gamma_idx, lambda_idx);
  });
}

rdcb_status rdcb_grid_best(const rdcb_grid* grid, size_t gamma_idx, size_t lambda_idx,
                           size_t* out_codec) {
  if (auto s = require(grid && out_codec, "rdcb_grid_best: null argument")) return s;
  return guarded([&] {
    if (gamma_idx >= grid->grid.gamma_db_axis.size() ||
        lambda_idx >= grid->grid.lambda_db_axis.size()) {
      rdc::fail(rdc::ErrorKind::invalid_argument, "rdcb_grid_best: index out of range");
    }
    *out_codec = grid->grid.best.at(gamma_idx, lambda_idx);
  });
}

rdcb_status rdcb_grid_write_surface_csv(const rdcb_grid* grid, size_t codec, const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_surface_csv: null argument")) return s;
  return guarded([&] { rdc::write_text_file(path, rdc::surface_csv(grid->grid, codec)); });
}

rdcb_status rdcb_grid_write_surface_svg(const rdcb_grid* grid, size_t codec, const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_surface_svg: null argument")) return s;
  return guarded([&] { rdc::write_text_file(path, rdc::surface_svg(grid->grid, codec)); });
}

rdcb_status rdcb_grid_write_difference_csv(const rdcb_grid* grid, size_t codec_a, size_t codec_b,
                                           const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_difference_csv: null argument")) return s;
  return guarded(
      [&] { rdc::write_text_file(path, rdc::difference_csv(grid->grid, codec_a, codec_b)); });
}

rdcb_status rdcb_grid_write_difference_json(const rdcb_grid* grid, size_t codec_a, size_t codec_b,
                                            const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_difference_json: null argument")) return s;
  return guarded(
      [&] { rdc::write_text_file(path, rdc::difference_json(grid->grid, codec_a, codec_b)); });
}

rdcb_status rdcb_grid_write_difference_svg(const rdcb_grid* grid, size_t codec_a, size_t codec_b,
                                           const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_difference_svg: null argument")) return s;
  return guarded(
      [&] { rdc::write_text_file(path, rdc::difference_svg(grid->grid, codec_a, codec_b)); });
}

rdcb_status rdcb_grid_write_best_map_csv(const rdcb_grid* grid, const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_best_map_csv: null argument")) return s;
  return guarded([&] { rdc::write_text_file(path, rdc::best_map_csv(grid->grid)); });
}

rdcb_status rdcb_grid_write_best_map_json(const rdcb_grid* grid, const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_best_map_json: null argument")) return s;
  return guarded([&] { rdc::write_text_file(path, rdc::best_map_json(grid->grid)); });
}

rdcb_status rdcb_grid_write_best_map_svg(const rdcb_grid* grid, const char* path,
                                         const double* mark_lambda_gamma) {
  if (auto s = require(grid && path, "rdcb_grid_write_best_map_svg: null argument")) return s;
  return guarded([&] {
    std::optional<std::pair<double, double>> mark;
    if (mark_lambda_gamma) mark = {mark_lambda_gamma[0], mark_lambda_gamma[1]};
    rdc::write_text_file(path, rdc::best_map_svg(grid->grid, mark));
  });
}

rdcb_status rdcb_grid_write_json(const rdcb_grid* grid, const char* path) {
  if (auto s = require(grid && path, "rdcb_grid_write_json: null argument")) return s;
  return guarded([&] { rdc::write_text_file(path, rdc::grid_to_json(grid->grid)); });
}

} /* extern "C" */
