#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "error.hpp"
#include "interp.hpp"
#include "oracles.hpp"

using rdc::Curve1D;
using rdc::InterpMethod;

namespace {

std::vector<std::pair<double, double>> zip(const std::vector<double>& t,
                                           const std::vector<double>& y) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.emplace_back(t[i], y[i]);
  return out;
}

Curve1D random_curve(std::mt19937_64& rng, std::size_t n, InterpMethod method) {
  std::uniform_real_distribution<double> dt(0.1, 2.0);
  std::uniform_real_distribution<double> dy(-5.0, 5.0);
  std::vector<double> t(n), y(n);
  double acc = dy(rng);
  for (std::size_t i = 0; i < n; ++i) {
    acc += dt(rng);
    t[i] = acc;
    y[i] = dy(rng);
  }
  return Curve1D(t, y, method);
}

}  // namespace

TEST_CASE("two points give a straight line under either method") {
  for (InterpMethod m : {InterpMethod::monotone_cubic, InterpMethod::linear}) {
    const Curve1D c({1.0, 3.0}, {2.0, 8.0}, m);
    for (double t : {1.0, 1.5, 2.0, 2.5, 3.0}) {
      CHECK(c.eval(t) == doctest::Approx(2.0 + 3.0 * (t - 1.0)).epsilon(1e-13));
    }
  }
}

TEST_CASE("interpolant passes through every knot exactly") {
  const std::vector<double> t{0, 1, 2, 3};
  const std::vector<double> y{0, 1, 4, 9};  // y = t^2 sampled
  for (InterpMethod m : {InterpMethod::monotone_cubic, InterpMethod::linear}) {
    const Curve1D c(t, y, m);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(c.eval(t[i]) == y[i]);  // exact, not approximate
    }
  }
}

TEST_CASE("monotone data stays monotone between knots (dense sampling oracle)") {
  const std::vector<double> t{1, 2, 3, 4};
  const std::vector<double> y{1, 3, 3.1, 8};
  const Curve1D c(t, y, InterpMethod::monotone_cubic);
  const std::size_t samples = 1000;
  for (std::size_t piece = 0; piece + 1 < t.size(); ++piece) {
    double prev = c.eval(t[piece]);
    for (std::size_t k = 1; k <= samples; ++k) {
      const double tt =
          t[piece] + (t[piece + 1] - t[piece]) * static_cast<double>(k) / samples;
      const double v = c.eval(tt);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("no overshoot on a flat-then-steep profile") {
  // A classic overshoot trap for plain cubic splines.
  const std::vector<double> t{0, 1, 2, 3, 4};
  const std::vector<double> y{0, 0, 0, 1, 10};
  const Curve1D c(t, y, InterpMethod::monotone_cubic);
  for (int k = 0; k <= 4000; ++k) {
    const double tt = 4.0 * k / 4000.0;
    const double v = c.eval(tt);
    CHECK(v >= -1e-12);
    CHECK(v <= 10.0 + 1e-12);
  }
}

TEST_CASE("duplicate abscissae are rejected") {
  const std::vector<std::pair<double, double>> pts{{1.0, 2.0}, {1.0, 3.0}, {2.0, 4.0}};
  CHECK_THROWS_AS(rdc::fit(pts, InterpMethod::monotone_cubic), rdc::Error);
  CHECK_THROWS_AS(Curve1D({1.0, 1.0}, {2.0, 3.0}, InterpMethod::linear), rdc::Error);
}

TEST_CASE("fit sorts its input") {
  const std::vector<std::pair<double, double>> pts{{3.0, 9.0}, {1.0, 1.0}, {2.0, 4.0}};
  const Curve1D c = rdc::fit(pts, InterpMethod::linear);
  CHECK(c.t_min() == 1.0);
  CHECK(c.t_max() == 3.0);
  CHECK(c.eval(2.0) == 4.0);
}

TEST_CASE("eval refuses extrapolation") {
  const Curve1D c({0.0, 1.0}, {0.0, 1.0}, InterpMethod::linear);
  CHECK_THROWS_AS(c.eval(-0.001), rdc::Error);
  CHECK_THROWS_AS(c.eval(1.001), rdc::Error);
  CHECK_THROWS_AS(c.integrate(-0.1, 0.5), rdc::Error);
  CHECK_THROWS_AS(c.integrate(0.5, 1.1), rdc::Error);
  CHECK_THROWS_AS(c.integrate(0.8, 0.2), rdc::Error);
}

TEST_CASE("integrate: empty interval and triangle area") {
  const Curve1D line({0.0, 1.0}, {0.0, 2.0}, InterpMethod::linear);
  CHECK(line.integrate(0.3, 0.3) == 0.0);
  CHECK(line.integrate(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("integrate matches composite Simpson with 1e4 panels") {
  std::mt19937_64 rng(20240811);
  for (int rep = 0; rep < 20; ++rep) {
    const Curve1D c = random_curve(rng, 6, InterpMethod::monotone_cubic);
    const double a = c.t_min();
    const double b = c.t_max();
    const double expected = oracles::simpson([&](double t) { return c.eval(t); }, a, b, 10000);
    const double got = c.integrate(a, b);
    CHECK(oracles::close_rel(got, expected, 1e-9, 1e-12));
  }
}

TEST_CASE("integration is additive over subintervals") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const Curve1D c = random_curve(rng, 5, InterpMethod::monotone_cubic);
    std::uniform_real_distribution<double> du(0.0, 1.0);
    const double span = c.t_max() - c.t_min();
    double a = c.t_min() + du(rng) * span;
    double b = c.t_min() + du(rng) * span;
    double m = c.t_min() + du(rng) * span;
    if (a > b) std::swap(a, b);
    if (m < a) m = a;
    if (m > b) m = b;
    const double whole = c.integrate(a, b);
    const double split = c.integrate(a, m) + c.integrate(m, b);
    CHECK(oracles::close_rel(whole, split, 1e-12, 1e-15));
  }
}

TEST_CASE("both methods are linear in the ordinates") {
  std::vector<double> t{0, 1, 2.5, 4, 7};
  std::vector<double> y{2, -1, 0.5, 3, 3.2};
  for (InterpMethod m : {InterpMethod::monotone_cubic, InterpMethod::linear}) {
    for (double alpha : {2.0, -0.5, 10.0, 0.0}) {
      std::vector<double> ya(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) ya[i] = alpha * y[i];
      const Curve1D base(t, y, m);
      const Curve1D scaled(t, ya, m);
      const double i0 = base.integrate(0.0, 7.0);
      const double i1 = scaled.integrate(0.0, 7.0);
      CHECK(oracles::close_rel(i1, alpha * i0, 1e-12, 1e-12));
    }
  }
}

TEST_CASE("knot evaluation is exact on random curves") {
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 20; ++rep) {
    std::uniform_real_distribution<double> dt(0.05, 1.5), dy(-10, 10);
    std::vector<double> t, y;
    double acc = 0;
    for (int i = 0; i < 7; ++i) {
      acc += dt(rng);
      t.push_back(acc);
      y.push_back(dy(rng));
    }
    for (InterpMethod m : {InterpMethod::monotone_cubic, InterpMethod::linear}) {
      const Curve1D c(t, y, m);
      for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(c.eval(t[i]) == y[i]);
      }
    }
  }
}

TEST_CASE("curve construction validates inputs") {
  CHECK_THROWS_AS(Curve1D({1.0}, {2.0}, InterpMethod::linear), rdc::Error);
  CHECK_THROWS_AS(Curve1D({2.0, 1.0}, {0.0, 0.0}, InterpMethod::linear), rdc::Error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Curve1D({0.0, 1.0}, {0.0, inf}, InterpMethod::linear), rdc::Error);
}

TEST_CASE("fit of collinear points reproduces the line everywhere") {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 6; ++i) pts.emplace_back(i, 3.0 * i + 1.0);
  const Curve1D c = rdc::fit(pts, InterpMethod::monotone_cubic);
  for (double t = 0.0; t <= 5.0; t += 0.01) {
    CHECK(c.eval(t) == doctest::Approx(3.0 * t + 1.0).epsilon(1e-13));
  }
}
