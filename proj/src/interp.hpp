#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rdc {

enum class InterpMethod { monotone_cubic, linear };

const char* to_string(InterpMethod m);

// Piecewise-polynomial interpolant through strictly increasing knots.
// monotone_cubic is a C1 cubic Hermite with Fritsch-Carlson tangents, so the
// interpolant never overshoots locally monotone data. Integration is the
// exact antiderivative of each piece, not quadrature. Immutable after
// construction; eval/integrate are pure.
class Curve1D {
public:
  // Knots must be strictly increasing in t and all values finite.
  Curve1D(std::vector<double> t, std::vector<double> y, InterpMethod method);

  double eval(double t) const;

  // Exact definite integral over [a, b]; requires t_min() <= a <= b <= t_max().
  double integrate(double a, double b) const;

  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }
  std::size_t knot_count() const { return t_.size(); }
  InterpMethod method() const { return method_; }

private:
  std::size_t piece_index(double t) const;

  std::vector<double> t_;
  std::vector<double> y_;
  // coef_[i] = {c0, c1, c2, c3}: piece i is c0 + c1 u + c2 u^2 + c3 u^3 with
  // u = t - t_[i] on [t_[i], t_[i+1]].
  std::vector<std::array<double, 4>> coef_;
  InterpMethod method_;
};

// Sorts the points by abscissa and interpolates them. Duplicate abscissae
// are rejected.
Curve1D fit(std::span<const std::pair<double, double>> points, InterpMethod method);

}  // namespace rdc
