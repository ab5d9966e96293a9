#pragma once

#include <span>
#include <string>
#include <vector>

#include "cost.hpp"
#include "dataset.hpp"
#include "matrix.hpp"

namespace rdc {

// Business parameters of one application; app_calculator turns them into
// the (lambda, gamma) point where the application lives.
struct ApplicationModel {
  double n_users = 0.0;             // subscribers
  double hours = 0.0;               // hours of video per user
  double energy_price = 0.0;        // currency/kWh
  double data_price = 0.0;          // currency/GB
  double gpu_cost = 0.0;            // currency per decoding unit
  double gpu_capacity = 0.0;        // kMAC/pixel one unit sustains for the target format
  double gpu_power = 0.0;           // kW drawn by one unit
  double ref_complexity = 0.0;      // kMAC/pixel of the reference codec
  double ref_rate = 0.0;            // Mb/s of the reference codec
  double revenue_multiplier = 1.0;  // revenue / operating cost
  double psnr_full = 0.0;           // dB at which all users subscribe
  double psnr_none = 0.0;           // dB at which all users leave
};

void validate(const ApplicationModel& m);

// An application located in (lambda, gamma) space, with the currency-per-unit
// alpha weights and the intermediate quantities that produced them.
struct AppPoint {
  double lambda = 0.0;  // alpha2/alpha1
  double gamma = 0.0;   // alpha3/alpha1
  double alpha1 = 0.0;  // currency per unit MSE
  double alpha2 = 0.0;  // currency per Mb/s
  double alpha3 = 0.0;  // currency per kMAC/pixel

  double hw_per_kmac = 0.0;           // hardware cost per kMAC/pixel
  double energy_per_kmac_hour = 0.0;  // energy cost per kMAC/pixel per hour
  double gb_per_mbps = 0.0;           // GB transferred per Mb/s of rate
  double operating_ref = 0.0;         // operating cost of the reference codec
  double revenue = 0.0;               // revenue_multiplier * operating_ref
  double delta_mse = 0.0;             // MSE increase from psnr_full to psnr_none
  bool paper_rounding = false;
};

// Derives the alpha weights and (lambda, gamma) from the model. With
// paper_rounding the published worked example's intermediate rounding is
// reproduced (alpha3 truncated to whole currency units, revenue rounded to
// the nearest 100k, MSE endpoints rounded to 4 significant digits); without
// it every step is carried at full precision.
AppPoint app_calculator(const ApplicationModel& m, bool paper_rounding = false);

// Uniform dB-spaced axes for the (lambda, gamma) lattice; value i of an axis
// is lo + i*step in 10*log10 units. hi is included when it falls on a step.
struct GridSpec {
  double lambda_db_lo = -20.0;
  double lambda_db_hi = 40.0;
  double lambda_db_step = 0.5;
  double gamma_db_lo = -30.0;
  double gamma_db_hi = 30.0;
  double gamma_db_step = 0.5;
};

std::vector<double> make_axis(double lo, double hi, double step, const std::string& what);

enum class CostKind { cloud, curve };

const char* to_string(CostKind k);
CostKind cost_kind_from_string(const std::string& s);

// Per-codec cost surfaces over the (lambda, gamma) lattice plus the argmin
// map. Surfaces are stored linear and indexed (gamma row, lambda column);
// dB views are derived for reporting. best.at(g, l) is always the argmin
// over the surfaces at that cell, ties broken by lowest codec index.
struct AppSpaceGrid {
  std::vector<double> lambda_db_axis;
  std::vector<double> gamma_db_axis;
  std::vector<std::string> codec_names;
  Reducer reducer = Reducer::min;
  CostKind cost_kind = CostKind::cloud;
  std::vector<Mat<double>> cost_surfaces;  // linear J, one per codec
  Mat<std::size_t> best;

  Mat<double> surface_db(std::size_t codec) const;
};

// Evaluates every codec's cost at every grid cell. cloud kind uses the
// unnormalized per-point Lagrangian reduced by `reducer`; curve kind uses
// curve_cost and requires every codec in curve mode. Cells are independent,
// so work may be split across `threads` (0 = pick a default); the result is
// bit-identical for any thread count.
AppSpaceGrid cost_surface(std::span<const CodecDataset> codecs, const GridSpec& spec,
                          Reducer reducer, CostKind cost_kind, unsigned threads = 0);

// Elementwise difference of two codecs' surfaces; the grids must carry
// identical axes. db_domain subtracts the dB surfaces (the ratio in dB),
// otherwise linear J_a - J_b.
Mat<double> cost_difference(const AppSpaceGrid& ga, std::size_t codec_a, const AppSpaceGrid& gb,
                            std::size_t codec_b, bool db_domain);

struct BestMap {
  Mat<std::size_t> index;
  std::vector<std::size_t> winners;  // distinct codec indices appearing in the map
};

// The argmin map over the grid's surfaces. Needs at least 2 codecs.
BestMap best_map(const AppSpaceGrid& grid);

double db_of(double linear);  // 10*log10, -inf at 0

}  // namespace rdc
