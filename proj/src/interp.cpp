#include "interp.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

namespace {

int sgn(double x) { return (x > 0) - (x < 0); }

// One-sided three-point tangent estimate at a boundary knot, clamped so the
// end piece stays shape-preserving (Fritsch-Carlson conditions).
double edge_tangent(double h0, double h1, double d0, double d1) {
  double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (sgn(m) != sgn(d0)) {
    m = 0.0;
  } else if (sgn(d0) != sgn(d1) && std::abs(m) > 3.0 * std::abs(d0)) {
    m = 3.0 * d0;
  }
  return m;
}

// Knot tangents for the monotone cubic: zero at local extrema, otherwise the
// interval-weighted harmonic mean of the adjacent secant slopes.
std::vector<double> pchip_tangents(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = t[i + 1] - t[i];
    d[i] = (y[i + 1] - y[i]) / h[i];
  }
  std::vector<double> m(n);
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (sgn(d[k - 1]) * sgn(d[k]) <= 0) {
      m[k] = 0.0;
    } else {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      m[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
    }
  }
  m[0] = edge_tangent(h[0], h[1], d[0], d[1]);
  m[n - 1] = edge_tangent(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

}  // namespace

const char* to_string(InterpMethod m) {
  return m == InterpMethod::monotone_cubic ? "monotone-cubic" : "linear";
}

Curve1D::Curve1D(std::vector<double> t, std::vector<double> y, InterpMethod method)
    : t_(std::move(t)), y_(std::move(y)), method_(method) {
  if (t_.size() != y_.size()) {
    fail(ErrorKind::invalid_argument, "curve: abscissa/ordinate size mismatch");
  }
  if (t_.size() < 2) {
    fail(ErrorKind::invalid_argument, "curve: need at least 2 knots, got " +
                                          std::to_string(t_.size()));
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i]) || !std::isfinite(y_[i])) {
      fail(ErrorKind::invalid_argument, "curve: non-finite knot at index " + std::to_string(i));
    }
    if (i > 0 && !(t_[i - 1] < t_[i])) {
      fail(ErrorKind::invalid_argument,
           "curve: abscissae must be strictly increasing, got " + format_double(t_[i - 1]) +
               " then " + format_double(t_[i]));
    }
  }

  const std::size_t pieces = t_.size() - 1;
  coef_.resize(pieces);
  if (method_ == InterpMethod::linear) {
    for (std::size_t i = 0; i < pieces; ++i) {
      const double slope = (y_[i + 1] - y_[i]) / (t_[i + 1] - t_[i]);
      coef_[i] = {y_[i], slope, 0.0, 0.0};
    }
  } else {
    const std::vector<double> m = pchip_tangents(t_, y_);
    for (std::size_t i = 0; i < pieces; ++i) {
      const double h = t_[i + 1] - t_[i];
      const double delta = (y_[i + 1] - y_[i]) / h;
      coef_[i] = {y_[i], m[i], (3.0 * delta - 2.0 * m[i] - m[i + 1]) / h,
                  (m[i] + m[i + 1] - 2.0 * delta) / (h * h)};
    }
  }
}

std::size_t Curve1D::piece_index(double t) const {
  // upper_bound puts t == t_[i] into piece i, so knot evaluation hits the
  // exact c0 coefficient.
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - t_.begin());
  if (idx == 0) return 0;
  if (idx > coef_.size()) return coef_.size() - 1;
  return idx - 1;
}

double Curve1D::eval(double t) const {
  if (!(t >= t_min()) || !(t <= t_max())) {
    fail(ErrorKind::domain, "eval: t=" + format_double(t) + " outside curve domain [" +
                                format_double(t_min()) + ", " + format_double(t_max()) +
                                "] (no extrapolation)");
  }
  if (t == t_.back()) return y_.back();
  const std::size_t i = piece_index(t);
  const double u = t - t_[i];
  const auto& c = coef_[i];
  return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
}

double Curve1D::integrate(double a, double b) const {
  if (!(a >= t_min()) || !(b <= t_max()) || !(a <= b)) {
    fail(ErrorKind::domain, "integrate: bounds [" + format_double(a) + ", " + format_double(b) +
                                "] outside curve domain [" + format_double(t_min()) + ", " +
                                format_double(t_max()) + "]");
  }
  if (a == b) return 0.0;
  auto antiderivative = [](const std::array<double, 4>& c, double u) {
    return u * (c[0] + u * (c[1] / 2.0 + u * (c[2] / 3.0 + u * c[3] / 4.0)));
  };
  const std::size_t first = piece_index(a);
  const std::size_t last = piece_index(b);
  double total = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    const double lo = std::max(a, t_[i]) - t_[i];
    const double hi = std::min(b, t_[i + 1]) - t_[i];
    if (hi <= lo) continue;
    total += antiderivative(coef_[i], hi) - antiderivative(coef_[i], lo);
  }
  return total;
}

Curve1D fit(std::span<const std::pair<double, double>> points, InterpMethod method) {
  std::vector<std::pair<double, double>> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> t, y;
  t.reserve(sorted.size());
  y.reserve(sorted.size());
  for (const auto& [ti, yi] : sorted) {
    if (!t.empty() && ti == t.back()) {
      fail(ErrorKind::invalid_argument,
           "fit: duplicate abscissa " + format_double(ti));
    }
    t.push_back(ti);
    y.push_back(yi);
  }
  return Curve1D(std::move(t), std::move(y), method);
}

}  // namespace rdc
