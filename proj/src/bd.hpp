#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dataset.hpp"
#include "interp.hpp"

namespace rdc {

enum class Plane { rd, rc, dc };
enum class DistortionScale { mse_db, linear_mse };

const char* to_string(Plane p);
const char* to_string(DistortionScale s);
Plane plane_from_string(const std::string& s);
DistortionScale distortion_scale_from_string(const std::string& s);

// Which projection/rotation produced a delta. theta is the projection-line
// inclination in radians, in [-pi/2, 0]; tan(theta) = -lambda.
struct ProjectionSpec {
  Plane plane = Plane::rd;
  double theta = 0.0;
  DistortionScale distortion_scale = DistortionScale::linear_mse;
};

struct BdResult {
  double value = 0.0;  // average ordinate difference over [t0, t1]
  double t0 = 0.0;
  double t1 = 0.0;
  ProjectionSpec axis_spec;
};

// MSE expressed in dB: 10*log10(mse). Negative for MSE < 1.
double mse_to_db(double mse);

// PSNR for 8-bit data: 10*log10(255^2/mse) = 10*log10(255^2) - mse_to_db(mse).
double psnr_from_mse(double mse);

using Point2 = std::pair<double, double>;

// x = r cos(theta) + d sin(theta), y = -r sin(theta) + d cos(theta).
std::vector<Point2> rotate_points(std::span<const Point2> points, double theta);

// Average ordinate difference of the two interpolated sets over their
// abscissa overlap [max of min x, min of max x]. Disjoint ranges raise
// no-overlap; duplicate abscissae within a set raise invalid-argument.
BdResult bd_delta(std::span<const Point2> a, std::span<const Point2> b,
                  InterpMethod method = InterpMethod::monotone_cubic);

// Delta in the direction theta = -arctan(lambda) on the (rate, distortion)
// plane. lambda may be infinity, which maps (r, d) -> (-d, r) exactly, so
// delta_lambda(inf) is the rate delta over the distortion overlap with
// "cheaper in rate" negative, the same orientation as delta_lambda(0) = dD.
BdResult delta_lambda(const CodecDataset& a, const CodecDataset& b, double lambda,
                      DistortionScale scale = DistortionScale::mse_db);

// Same, after projecting RDC points onto one coordinate plane: RD keeps
// (r, d), RC keeps (r, c), DC keeps (d, c); the first surviving coordinate
// is the abscissa. lambda = 0 / infinity give the six axis-oriented deltas
// (e.g. RD: dD_R and dR_D).
BdResult delta_3d(const CodecDataset& a, const CodecDataset& b, Plane plane, double lambda,
                  DistortionScale scale = DistortionScale::mse_db);

// Conventional BD-rate in percent: the average log10(rate) difference over
// the distortion overlap, reported as 100*(10^BD - 1). This is the
// conventional %-savings variant, not one of the Delta metrics above.
double bd_rate_percent(const CodecDataset& a, const CodecDataset& b,
                       DistortionScale scale = DistortionScale::mse_db);

}  // namespace rdc
