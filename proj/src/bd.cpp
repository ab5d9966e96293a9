#include "bd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

namespace {

constexpr double kPeakSquared = 255.0 * 255.0;

std::string range_string(std::span<const Point2> pts) {
  auto [lo, hi] = std::minmax_element(
      pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.first < b.first; });
  return "[" + format_double(lo->first) + ", " + format_double(hi->first) + "]";
}

// Sorted knots for one rotated/projected point set. Exactly tied abscissae
// are collapsed to their mean ordinate and flagged so the caller can drop to
// linear interpolation; a set that collapses below 2 knots is degenerate.
struct PreparedSet {
  std::vector<Point2> knots;
  bool had_ties = false;
};

PreparedSet prepare_set(std::span<const Point2> points, ErrorKind collapse_kind,
                        const std::string& what) {
  std::vector<Point2> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Point2& a, const Point2& b) { return a.first < b.first; });
  PreparedSet out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < sorted.size() && sorted[j].first == sorted[i].first) {
      sum += sorted[j].second;
      ++j;
    }
    out.knots.emplace_back(sorted[i].first, sum / static_cast<double>(j - i));
    if (j - i > 1) out.had_ties = true;
    i = j;
  }
  if (out.knots.size() < 2) {
    fail(collapse_kind,
         what + ": point set collapses to a single abscissa after projection/rotation");
  }
  return out;
}

BdResult bd_delta_prepared(const PreparedSet& a, const PreparedSet& b, InterpMethod requested) {
  // Ties force the linear fallback for both sets to keep the metric
  // symmetric in its arguments.
  const InterpMethod method =
      (a.had_ties || b.had_ties) ? InterpMethod::linear : requested;
  const double t0 = std::max(a.knots.front().first, b.knots.front().first);
  const double t1 = std::min(a.knots.back().first, b.knots.back().first);
  if (!(t0 < t1)) {
    fail(ErrorKind::no_overlap, "curves do not overlap along the abscissa: " +
                                    range_string(a.knots) + " vs " + range_string(b.knots));
  }
  const Curve1D ca = fit(a.knots, method);
  const Curve1D cb = fit(b.knots, method);
  BdResult r;
  r.t0 = t0;
  r.t1 = t1;
  r.value = (ca.integrate(t0, t1) - cb.integrate(t0, t1)) / (t1 - t0);
  return r;
}

double scale_distortion(double mse, DistortionScale scale) {
  return scale == DistortionScale::mse_db ? mse_to_db(mse) : mse;
}

std::vector<Point2> project_points(const CodecDataset& c, Plane plane, DistortionScale scale) {
  std::vector<Point2> out;
  out.reserve(c.points().size());
  for (const RdcPoint& p : c.points()) {
    switch (plane) {
      case Plane::rd: out.emplace_back(p.rate, scale_distortion(p.distortion, scale)); break;
      case Plane::rc: out.emplace_back(p.rate, p.complexity); break;
      case Plane::dc: out.emplace_back(scale_distortion(p.distortion, scale), p.complexity); break;
    }
  }
  return out;
}

void require_curve_mode(const CodecDataset& c) {
  if (c.mode() != DatasetMode::curve) {
    fail(ErrorKind::invalid_argument,
         "codec \"" + c.name() + "\" is not in curve mode; BD deltas need curves");
  }
}

std::vector<Point2> rotate_for_lambda(std::span<const Point2> pts, double lambda) {
  if (std::isinf(lambda)) {
    // theta = -pi/2 exactly: (x, y) -> (-y, x).
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& p : pts) out.emplace_back(-p.second, p.first);
    return out;
  }
  return rotate_points(pts, -std::atan(lambda));
}

BdResult delta_on_plane(const CodecDataset& a, const CodecDataset& b, Plane plane, double lambda,
                        DistortionScale scale, ErrorKind collapse_kind) {
  require_curve_mode(a);
  require_curve_mode(b);
  if (std::isnan(lambda) || lambda < 0) {
    fail(ErrorKind::invalid_argument,
         "lambda must be >= 0 or infinity, got " + format_double(lambda));
  }
  const auto ra = rotate_for_lambda(project_points(a, plane, scale), lambda);
  const auto rb = rotate_for_lambda(project_points(b, plane, scale), lambda);
  const PreparedSet pa = prepare_set(ra, collapse_kind, "codec \"" + a.name() + "\"");
  const PreparedSet pb = prepare_set(rb, collapse_kind, "codec \"" + b.name() + "\"");
  BdResult r = bd_delta_prepared(pa, pb, InterpMethod::monotone_cubic);
  r.axis_spec.plane = plane;
  r.axis_spec.theta = std::isinf(lambda) ? -std::numbers::pi / 2.0 : -std::atan(lambda);
  r.axis_spec.distortion_scale = scale;
  return r;
}

}  // namespace

const char* to_string(Plane p) {
  switch (p) {
    case Plane::rd: return "RD";
    case Plane::rc: return "RC";
    case Plane::dc: return "DC";
  }
  return "?";
}

const char* to_string(DistortionScale s) {
  return s == DistortionScale::mse_db ? "mse-db" : "linear";
}

Plane plane_from_string(const std::string& s) {
  if (s == "RD" || s == "rd") return Plane::rd;
  if (s == "RC" || s == "rc") return Plane::rc;
  if (s == "DC" || s == "dc") return Plane::dc;
  fail(ErrorKind::parse, "unknown plane \"" + s + "\" (expected RD, RC or DC)");
}

DistortionScale distortion_scale_from_string(const std::string& s) {
  if (s == "mse-db") return DistortionScale::mse_db;
  if (s == "linear") return DistortionScale::linear_mse;
  fail(ErrorKind::parse, "unknown distortion scale \"" + s + "\" (expected mse-db or linear)");
}

double mse_to_db(double mse) {
  if (!(mse > 0) || !std::isfinite(mse)) {
    fail(ErrorKind::domain, "mse_to_db: mse must be positive, got " + format_double(mse));
  }
  return 10.0 * std::log10(mse);
}

double psnr_from_mse(double mse) {
  if (!(mse > 0) || !std::isfinite(mse)) {
    fail(ErrorKind::domain, "psnr_from_mse: mse must be positive, got " + format_double(mse));
  }
  return 10.0 * std::log10(kPeakSquared / mse);
}

std::vector<Point2> rotate_points(std::span<const Point2> points, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Point2> out;
  out.reserve(points.size());
  for (const Point2& p : points) {
    out.emplace_back(p.first * c + p.second * s, -p.first * s + p.second * c);
  }
  return out;
}

BdResult bd_delta(std::span<const Point2> a, std::span<const Point2> b, InterpMethod method) {
  if (a.size() < 2 || b.size() < 2) {
    fail(ErrorKind::invalid_argument, "bd_delta: each set needs at least 2 points");
  }
  auto check_distinct = [](const PreparedSet& s, const char* which) {
    if (s.had_ties) {
      fail(ErrorKind::invalid_argument,
           std::string("bd_delta: set ") + which + " has duplicate abscissae");
    }
  };
  const PreparedSet pa = prepare_set(a, ErrorKind::invalid_argument, "set A");
  const PreparedSet pb = prepare_set(b, ErrorKind::invalid_argument, "set B");
  check_distinct(pa, "A");
  check_distinct(pb, "B");
  return bd_delta_prepared(pa, pb, method);
}

BdResult delta_lambda(const CodecDataset& a, const CodecDataset& b, double lambda,
                      DistortionScale scale) {
  return delta_on_plane(a, b, Plane::rd, lambda, scale, ErrorKind::non_monotone);
}

BdResult delta_3d(const CodecDataset& a, const CodecDataset& b, Plane plane, double lambda,
                  DistortionScale scale) {
  return delta_on_plane(a, b, plane, lambda, scale, ErrorKind::degenerate_projection);
}

double bd_rate_percent(const CodecDataset& a, const CodecDataset& b, DistortionScale scale) {
  require_curve_mode(a);
  require_curve_mode(b);
  auto log_rate_points = [&](const CodecDataset& c) {
    std::vector<Point2> out;
    out.reserve(c.points().size());
    for (const RdcPoint& p : c.points()) {
      if (!(p.rate > 0)) {
        fail(ErrorKind::domain,
             "bd_rate_percent: codec \"" + c.name() + "\" has a non-positive rate");
      }
      out.emplace_back(scale_distortion(p.distortion, scale), std::log10(p.rate));
    }
    return out;
  };
  const auto pa = log_rate_points(a);
  const auto pb = log_rate_points(b);
  const BdResult r = bd_delta(pa, pb);
  return 100.0 * (std::pow(10.0, r.value) - 1.0);
}

}  // namespace rdc
