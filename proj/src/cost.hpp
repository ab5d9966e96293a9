#pragma once

#include <span>
#include <vector>

#include "dataset.hpp"

namespace rdc {

// The plane D + lambda*R + gamma*C = 0. Weights are non-negative and finite;
// zero is admitted as the degenerate boundary (e.g. gamma = 0 reduces to a
// pure RD comparison).
struct CostPlane {
  double lambda = 0.0;
  double gamma = 0.0;

  CostPlane(double lambda_, double gamma_);
};

// Distance from p to the cost plane: (d + lambda r + gamma c)/sqrt(1 +
// lambda^2 + gamma^2). Non-negative whenever the RDC values are.
double plane_distance(const RdcPoint& p, const CostPlane& plane);

// Orthogonal projection of p onto the cost plane. The result satisfies
// d' + lambda r' + gamma c' = 0 and may have negative coordinates.
RdcPoint project_onto_plane(const RdcPoint& p, const CostPlane& plane);

enum class Reducer { min, mean };

const char* to_string(Reducer r);
Reducer reducer_from_string(const std::string& s);

struct CurveCostBreakdown {
  struct Segment {
    double length = 0.0;         // projected segment length
    double mean_distance = 0.0;  // average of the endpoint plane distances
  };
  double total = 0.0;  // sum(length*mean_distance)/sum(length)
  std::vector<Segment> per_segment;
};

// Projected-arc-length-weighted average plane distance of a curve-mode
// codec's polyline. Zero-length projected segments carry zero weight; if the
// whole curve projects to one point the curve is degenerate.
CurveCostBreakdown curve_cost(const CodecDataset& codec, const CostPlane& plane);

// Per-point unnormalized Lagrangian costs d + lambda r + gamma c. Note the
// missing sqrt(1 + lambda^2 + gamma^2) factor relative to plane_distance.
std::vector<double> cloud_costs(const CodecDataset& codec, const CostPlane& plane);

// The per-point costs reduced by min or mean.
double cloud_cost(const CodecDataset& codec, const CostPlane& plane, Reducer reducer);

// Dot product of a cost vector with an importance vector; the RDC case is
// linear_cost([r,d,c], [lambda,1,gamma]).
double linear_cost(std::span<const double> s, std::span<const double> u);

}  // namespace rdc
