#include "dataset.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

void validate(const RdcPoint& p, const std::string& context) {
  if (!std::isfinite(p.rate) || !std::isfinite(p.distortion) || !std::isfinite(p.complexity)) {
    fail(ErrorKind::invariant, context + ": non-finite RDC value");
  }
  if (p.rate < 0 || p.distortion < 0 || p.complexity < 0) {
    fail(ErrorKind::invariant,
         context + ": negative RDC value (rate=" + format_double(p.rate) +
             ", mse=" + format_double(p.distortion) +
             ", kmac=" + format_double(p.complexity) + ")");
  }
}

const char* to_string(DatasetMode mode) {
  return mode == DatasetMode::curve ? "curve" : "cloud";
}

DatasetMode dataset_mode_from_string(const std::string& s) {
  if (s == "curve") return DatasetMode::curve;
  if (s == "cloud") return DatasetMode::cloud;
  fail(ErrorKind::parse, "unknown dataset mode \"" + s + "\" (expected \"curve\" or \"cloud\")");
}

CodecDataset::CodecDataset(std::string name, std::vector<RdcPoint> points, DatasetMode mode)
    : name_(std::move(name)), points_(std::move(points)), mode_(mode) {
  if (name_.empty()) fail(ErrorKind::invariant, "codec name must not be empty");
  const std::string ctx = "codec \"" + name_ + "\"";
  const std::size_t min_points = mode_ == DatasetMode::curve ? 2 : 1;
  if (points_.size() < min_points) {
    fail(ErrorKind::invariant, ctx + ": " + to_string(mode_) + " mode needs at least " +
                                   std::to_string(min_points) + " point(s), got " +
                                   std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    validate(points_[i], ctx + " point " + std::to_string(i));
  }
  if (mode_ == DatasetMode::curve) {
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].rate < points_[i].rate)) {
        fail(ErrorKind::invariant,
             ctx + ": curve points must have strictly increasing rate, points " +
                 std::to_string(i - 1) + " and " + std::to_string(i) + " have rates " +
                 format_double(points_[i - 1].rate) + " and " + format_double(points_[i].rate));
      }
    }
  }
  auto key = [](const RdcPoint& p) { return std::tie(p.rate, p.distortion, p.complexity); };
  std::vector<RdcPoint> sorted = points_;
  std::sort(sorted.begin(), sorted.end(),
            [&](const RdcPoint& a, const RdcPoint& b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1] == sorted[i]) {
      fail(ErrorKind::invariant, ctx + ": duplicate point (rate=" + format_double(sorted[i].rate) +
                                     ", mse=" + format_double(sorted[i].distortion) +
                                     ", kmac=" + format_double(sorted[i].complexity) + ")");
    }
  }
}

void validate(const RawMeasurement& m) {
  const std::string ctx = "measurement \"" + m.sequence_id + "\"";
  if (m.width <= 0 || m.height <= 0) {
    fail(ErrorKind::invariant, ctx + ": width and height must be positive");
  }
  if (!(m.frame_rate > 0) || !std::isfinite(m.frame_rate)) {
    fail(ErrorKind::invariant, ctx + ": frame_rate must be positive and finite");
  }
  if (m.bit_depth != 8 && m.bit_depth != 10 && m.bit_depth != 12) {
    fail(ErrorKind::invariant, ctx + ": unsupported bit_depth " + std::to_string(m.bit_depth) +
                                   " (supported: 8, 10, 12)");
  }
  if (!(m.bits_per_pixel >= 0) || !std::isfinite(m.bits_per_pixel)) {
    fail(ErrorKind::invariant, ctx + ": bits_per_pixel must be non-negative and finite");
  }
  if (!(m.mse >= 0) || !std::isfinite(m.mse)) {
    fail(ErrorKind::invariant, ctx + ": mse must be non-negative and finite");
  }
}

double normalize_rate(const RawMeasurement& m) {
  validate(m);
  return m.bits_per_pixel * 1920.0 * 1080.0 * 30.0 / 1e6;
}

double normalize_mse(const RawMeasurement& m) {
  validate(m);
  // 2^(2*(bit_depth-8)): the squared ratio of the peak values.
  const double divisor = std::exp2(2.0 * static_cast<double>(m.bit_depth - 8));
  return m.mse / divisor;
}

RdcPoint aggregate(std::span<const RawMeasurement> measurements, double complexity_kmac) {
  if (measurements.empty()) {
    fail(ErrorKind::invalid_argument, "aggregate: empty measurement list");
  }
  if (!(complexity_kmac >= 0) || !std::isfinite(complexity_kmac)) {
    fail(ErrorKind::invalid_argument, "aggregate: complexity must be non-negative and finite");
  }
  std::vector<double> rates, mses;
  rates.reserve(measurements.size());
  mses.reserve(measurements.size());
  for (const RawMeasurement& m : measurements) {
    rates.push_back(normalize_rate(m));
    mses.push_back(normalize_mse(m));
  }
  // Summing in sorted order makes the mean independent of row order.
  std::sort(rates.begin(), rates.end());
  std::sort(mses.begin(), mses.end());
  double rate_sum = 0.0;
  for (double r : rates) rate_sum += r;
  double mse_sum = 0.0;
  for (double d : mses) mse_sum += d;
  const double n = static_cast<double>(measurements.size());
  return RdcPoint{rate_sum / n, mse_sum / n, complexity_kmac};
}

}  // namespace rdc
