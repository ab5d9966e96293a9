#include "cost.hpp"

#include <cmath>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

CostPlane::CostPlane(double lambda_, double gamma_) : lambda(lambda_), gamma(gamma_) {
  if (!(lambda >= 0) || !std::isfinite(lambda)) {
    fail(ErrorKind::invalid_argument,
         "cost plane: lambda must be finite and >= 0, got " + format_double(lambda));
  }
  if (!(gamma >= 0) || !std::isfinite(gamma)) {
    fail(ErrorKind::invalid_argument,
         "cost plane: gamma must be finite and >= 0, got " + format_double(gamma));
  }
}

const char* to_string(Reducer r) { return r == Reducer::min ? "min" : "mean"; }

Reducer reducer_from_string(const std::string& s) {
  if (s == "min") return Reducer::min;
  if (s == "mean") return Reducer::mean;
  fail(ErrorKind::parse, "unknown reducer \"" + s + "\" (expected min or mean)");
}

double plane_distance(const RdcPoint& p, const CostPlane& plane) {
  return (p.distortion + plane.lambda * p.rate + plane.gamma * p.complexity) /
         std::sqrt(1.0 + plane.lambda * plane.lambda + plane.gamma * plane.gamma);
}

RdcPoint project_onto_plane(const RdcPoint& p, const CostPlane& plane) {
  const double q = (p.distortion + plane.lambda * p.rate + plane.gamma * p.complexity) /
                   (1.0 + plane.lambda * plane.lambda + plane.gamma * plane.gamma);
  return RdcPoint{p.rate - q * plane.lambda, p.distortion - q, p.complexity - q * plane.gamma};
}

CurveCostBreakdown curve_cost(const CodecDataset& codec, const CostPlane& plane) {
  if (codec.mode() != DatasetMode::curve) {
    fail(ErrorKind::invalid_argument,
         "curve_cost: codec \"" + codec.name() + "\" is not in curve mode");
  }
  const auto& pts = codec.points();
  CurveCostBreakdown out;
  double weighted = 0.0;
  double length_sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const RdcPoint a = project_onto_plane(pts[i], plane);
    const RdcPoint b = project_onto_plane(pts[i + 1], plane);
    const double dr = a.rate - b.rate;
    const double dd = a.distortion - b.distortion;
    const double dc = a.complexity - b.complexity;
    const double length = std::sqrt(dr * dr + dd * dd + dc * dc);
    const double mean_distance =
        (plane_distance(pts[i], plane) + plane_distance(pts[i + 1], plane)) / 2.0;
    out.per_segment.push_back({length, mean_distance});
    weighted += length * mean_distance;
    length_sum += length;
  }
  if (!(length_sum > 0)) {
    fail(ErrorKind::degenerate_curve, "curve_cost: codec \"" + codec.name() +
                                          "\" projects onto a single point of the plane");
  }
  out.total = weighted / length_sum;
  return out;
}

std::vector<double> cloud_costs(const CodecDataset& codec, const CostPlane& plane) {
  std::vector<double> out;
  out.reserve(codec.points().size());
  for (const RdcPoint& p : codec.points()) {
    out.push_back(p.distortion + plane.lambda * p.rate + plane.gamma * p.complexity);
  }
  return out;
}

double cloud_cost(const CodecDataset& codec, const CostPlane& plane, Reducer reducer) {
  const std::vector<double> costs = cloud_costs(codec, plane);
  if (reducer == Reducer::min) {
    double best = costs.front();
    for (double c : costs) best = std::min(best, c);
    return best;
  }
  double sum = 0.0;
  for (double c : costs) sum += c;
  return sum / static_cast<double>(costs.size());
}

double linear_cost(std::span<const double> s, std::span<const double> u) {
  if (s.empty() || s.size() != u.size()) {
    fail(ErrorKind::invalid_argument,
         "linear_cost: cost and importance vectors must have equal non-zero length (" +
             std::to_string(s.size()) + " vs " + std::to_string(u.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) total += u[i] * s[i];
  return total;
}

}  // namespace rdc
