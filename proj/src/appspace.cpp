#include "appspace.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

namespace {

constexpr double kPeakSquared = 255.0 * 255.0;

double round_to_4_significant(double x) {
  if (x == 0.0) return 0.0;
  const double magnitude = std::floor(std::log10(std::abs(x)));
  const double scale = std::pow(10.0, 3.0 - magnitude);
  return std::round(x * scale) / scale;
}

void require_positive(double v, const char* name) {
  if (!(v > 0) || !std::isfinite(v)) {
    fail(ErrorKind::invariant,
         std::string("application model: ") + name + " must be positive and finite");
  }
}

void require_non_negative(double v, const char* name) {
  if (!(v >= 0) || !std::isfinite(v)) {
    fail(ErrorKind::invariant,
         std::string("application model: ") + name + " must be non-negative and finite");
  }
}

}  // namespace

void validate(const ApplicationModel& m) {
  require_positive(m.n_users, "n_users");
  require_positive(m.hours, "hours");
  require_non_negative(m.energy_price, "energy_price");
  require_non_negative(m.data_price, "data_price");
  require_non_negative(m.gpu_cost, "gpu_cost");
  require_positive(m.gpu_capacity, "gpu_capacity");
  require_non_negative(m.gpu_power, "gpu_power");
  require_positive(m.ref_complexity, "ref_complexity");
  require_positive(m.ref_rate, "ref_rate");
  if (!(m.revenue_multiplier >= 1) || !std::isfinite(m.revenue_multiplier)) {
    fail(ErrorKind::invariant, "application model: revenue_multiplier must be >= 1");
  }
  require_positive(m.psnr_full, "psnr_full");
  require_positive(m.psnr_none, "psnr_none");
  if (!(m.psnr_full > m.psnr_none)) {
    fail(ErrorKind::invariant, "application model: psnr_full must exceed psnr_none");
  }
}

AppPoint app_calculator(const ApplicationModel& m, bool paper_rounding) {
  validate(m);
  AppPoint p;
  p.paper_rounding = paper_rounding;

  p.hw_per_kmac = m.gpu_cost / m.gpu_capacity;
  p.energy_per_kmac_hour = m.gpu_power * m.energy_price / m.gpu_capacity;
  p.alpha3 = (p.hw_per_kmac + m.hours * p.energy_per_kmac_hour) * m.n_users;
  if (paper_rounding) p.alpha3 = std::trunc(p.alpha3);

  p.gb_per_mbps = m.hours * 3600.0 * m.n_users / 8.0 / 1000.0;
  p.alpha2 = p.gb_per_mbps * m.data_price;

  p.operating_ref = m.ref_complexity * p.alpha3 + m.ref_rate * p.alpha2;
  p.revenue = m.revenue_multiplier * p.operating_ref;

  if (paper_rounding) {
    // Published chain: revenue rounded to the nearest 100k, the MSE endpoints
    // derived from the peak power rounded to 2 decimals of dB, every MSE
    // quantity carried at 4 significant digits.
    const double revenue_rounded = std::round(p.revenue / 100000.0) * 100000.0;
    const double peak_db = std::round(10.0 * std::log10(kPeakSquared) * 100.0) / 100.0;
    const double mse_none = round_to_4_significant(std::pow(10.0, (peak_db - m.psnr_none) / 10.0));
    const double mse_full = round_to_4_significant(std::pow(10.0, (peak_db - m.psnr_full) / 10.0));
    p.delta_mse = round_to_4_significant(mse_none - mse_full);
    if (!(p.delta_mse > 0)) {
      fail(ErrorKind::domain, "application model: non-positive MSE increase");
    }
    p.alpha1 = revenue_rounded / p.delta_mse;
  } else {
    p.delta_mse = kPeakSquared * (std::pow(10.0, -m.psnr_none / 10.0) -
                                  std::pow(10.0, -m.psnr_full / 10.0));
    if (!(p.delta_mse > 0)) {
      fail(ErrorKind::domain, "application model: non-positive MSE increase");
    }
    p.alpha1 = p.revenue / p.delta_mse;
  }

  if (!(p.alpha1 > 0)) {
    fail(ErrorKind::domain, "application model: derived alpha1 is not positive");
  }
  p.lambda = p.alpha2 / p.alpha1;
  p.gamma = p.alpha3 / p.alpha1;
  return p;
}

std::vector<double> make_axis(double lo, double hi, double step, const std::string& what) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || !(step > 0) ||
      !(lo <= hi)) {
    fail(ErrorKind::invalid_argument, what + " axis: need lo <= hi and step > 0, got " +
                                          format_double(lo) + ":" + format_double(hi) + ":" +
                                          format_double(step));
  }
  std::vector<double> axis;
  // Half-step slack so hi is included when it lies on the lattice despite
  // rounding.
  const double n = std::floor((hi - lo) / step + 0.5 + 1e-9);
  for (double i = 0; i <= n; ++i) {
    const double v = lo + i * step;
    if (v > hi + step * 1e-9) break;
    axis.push_back(v);
  }
  return axis;
}

const char* to_string(CostKind k) { return k == CostKind::cloud ? "cloud" : "curve"; }

CostKind cost_kind_from_string(const std::string& s) {
  if (s == "cloud") return CostKind::cloud;
  if (s == "curve") return CostKind::curve;
  fail(ErrorKind::parse, "unknown cost kind \"" + s + "\" (expected cloud or curve)");
}

double db_of(double linear) {
  if (linear < 0 || std::isnan(linear)) {
    fail(ErrorKind::domain, "dB of a negative value: " + format_double(linear));
  }
  return 10.0 * std::log10(linear);
}

Mat<double> AppSpaceGrid::surface_db(std::size_t codec) const {
  const Mat<double>& lin = cost_surfaces.at(codec);
  Mat<double> out(lin.rows(), lin.cols());
  for (std::size_t r = 0; r < lin.rows(); ++r) {
    for (std::size_t c = 0; c < lin.cols(); ++c) {
      out.at(r, c) = db_of(lin.at(r, c));
    }
  }
  return out;
}

AppSpaceGrid cost_surface(std::span<const CodecDataset> codecs, const GridSpec& spec,
                          Reducer reducer, CostKind cost_kind, unsigned threads) {
  if (codecs.empty()) {
    fail(ErrorKind::invalid_argument, "cost_surface: need at least one codec");
  }
  if (cost_kind == CostKind::curve) {
    for (const CodecDataset& c : codecs) {
      if (c.mode() != DatasetMode::curve) {
        fail(ErrorKind::invalid_argument, "cost_surface: cost kind \"curve\" needs every codec "
                                          "in curve mode, but \"" +
                                              c.name() + "\" is a cloud");
      }
    }
  }

  AppSpaceGrid grid;
  grid.lambda_db_axis = make_axis(spec.lambda_db_lo, spec.lambda_db_hi, spec.lambda_db_step,
                                  "lambda");
  grid.gamma_db_axis = make_axis(spec.gamma_db_lo, spec.gamma_db_hi, spec.gamma_db_step, "gamma");
  grid.reducer = reducer;
  grid.cost_kind = cost_kind;
  for (const CodecDataset& c : codecs) grid.codec_names.push_back(c.name());

  const std::size_t rows = grid.gamma_db_axis.size();
  const std::size_t cols = grid.lambda_db_axis.size();
  grid.cost_surfaces.assign(codecs.size(), Mat<double>(rows, cols));
  grid.best = Mat<std::size_t>(rows, cols);

  std::vector<double> lambdas(cols), gammas(rows);
  for (std::size_t c = 0; c < cols; ++c) lambdas[c] = std::pow(10.0, grid.lambda_db_axis[c] / 10.0);
  for (std::size_t r = 0; r < rows; ++r) gammas[r] = std::pow(10.0, grid.gamma_db_axis[r] / 10.0);

  auto eval_rows = [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t r = row_begin; r < row_end; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const CostPlane plane(lambdas[c], gammas[r]);
        std::size_t best_idx = 0;
        double best_val = 0.0;
        for (std::size_t i = 0; i < codecs.size(); ++i) {
          const double j = cost_kind == CostKind::cloud
                               ? cloud_cost(codecs[i], plane, reducer)
                               : curve_cost(codecs[i], plane).total;
          grid.cost_surfaces[i].at(r, c) = j;
          if (i == 0 || j < best_val) {
            best_val = j;
            best_idx = i;
          }
        }
        grid.best.at(r, c) = best_idx;
      }
    }
  };

  unsigned n_threads = threads;
  if (n_threads == 0) {
    n_threads = std::max(1u, std::thread::hardware_concurrency());
  }
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, rows));
  if (n_threads <= 1) {
    eval_rows(0, rows);
  } else {
    // Disjoint row ranges into preallocated storage: the surfaces cannot
    // depend on the partition.
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto guarded = [&](std::size_t begin, std::size_t end) {
      try {
        eval_rows(begin, end);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    };
    {
      std::vector<std::jthread> workers;
      workers.reserve(n_threads);
      const std::size_t chunk = (rows + n_threads - 1) / n_threads;
      for (unsigned w = 0; w < n_threads; ++w) {
        const std::size_t begin = std::min<std::size_t>(rows, w * chunk);
        const std::size_t end = std::min<std::size_t>(rows, begin + chunk);
        if (begin < end) workers.emplace_back(guarded, begin, end);
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  }
  return grid;
}

Mat<double> cost_difference(const AppSpaceGrid& ga, std::size_t codec_a, const AppSpaceGrid& gb,
                            std::size_t codec_b, bool db_domain) {
  if (ga.lambda_db_axis != gb.lambda_db_axis || ga.gamma_db_axis != gb.gamma_db_axis) {
    fail(ErrorKind::invalid_argument, "cost_difference: grids are not congruent");
  }
  if (codec_a >= ga.cost_surfaces.size() || codec_b >= gb.cost_surfaces.size()) {
    fail(ErrorKind::invalid_argument, "cost_difference: codec index out of range");
  }
  const Mat<double>& a = ga.cost_surfaces[codec_a];
  const Mat<double>& b = gb.cost_surfaces[codec_b];
  Mat<double> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.at(r, c) = db_domain ? db_of(a.at(r, c)) - db_of(b.at(r, c))
                               : a.at(r, c) - b.at(r, c);
    }
  }
  return out;
}

BestMap best_map(const AppSpaceGrid& grid) {
  if (grid.cost_surfaces.size() < 2) {
    fail(ErrorKind::invalid_argument, "best_map: need at least 2 codecs");
  }
  BestMap out;
  out.index = grid.best;
  std::vector<bool> seen(grid.cost_surfaces.size(), false);
  for (std::size_t idx : grid.best.data()) seen[idx] = true;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.winners.push_back(i);
  }
  return out;
}

}  // namespace rdc
