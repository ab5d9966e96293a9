#pragma once

#include <span>
#include <string>
#include <vector>

namespace rdc {

// One codec operating point. Rate is Mb/s normalized to 1920x1080 @ 30 Hz,
// distortion is MSE on the 8-bit 0-255 scale (RGB), complexity is decoder
// kMAC/pixel. Geometric operations may produce points with negative
// coordinates (e.g. plane projections); validate() enforces the measurement
// invariants where measured data enters the system.
struct RdcPoint {
  double rate = 0.0;
  double distortion = 0.0;
  double complexity = 0.0;

  friend bool operator==(const RdcPoint&, const RdcPoint&) = default;
};

void validate(const RdcPoint& p, const std::string& context);

enum class DatasetMode { curve, cloud };

const char* to_string(DatasetMode mode);
DatasetMode dataset_mode_from_string(const std::string& s);

// A named codec with its operating points. Curve mode means the points form
// a rate-parameterized polyline (at least 2 points, strictly increasing
// rate); cloud mode is an unordered set (at least 1 point). Immutable after
// construction; the constructor enforces all invariants.
class CodecDataset {
public:
  CodecDataset(std::string name, std::vector<RdcPoint> points, DatasetMode mode);

  const std::string& name() const { return name_; }
  const std::vector<RdcPoint>& points() const { return points_; }
  DatasetMode mode() const { return mode_; }

  friend bool operator==(const CodecDataset&, const CodecDataset&) = default;

private:
  std::string name_;
  std::vector<RdcPoint> points_;
  DatasetMode mode_;
};

// One row of a raw measurement CSV: a single sequence coded by a single
// coding instantiation, in native resolution and bit depth.
struct RawMeasurement {
  std::string sequence_id;
  long long width = 0;
  long long height = 0;
  double frame_rate = 0.0;
  long long bit_depth = 0;
  double bits_per_pixel = 0.0;
  double mse = 0.0;
};

void validate(const RawMeasurement& m);

// bits/pixel denormalized for a 1920x1080-pixel 30 Hz sequence, in Mb/s.
double normalize_rate(const RawMeasurement& m);

// Native-bit-depth MSE rescaled to the 8-bit 0-255 range: divided by
// 2^(2*(bit_depth-8)), i.e. /16 for 10-bit and /256 for 12-bit.
double normalize_mse(const RawMeasurement& m);

// Arithmetic mean of the normalized rates and MSEs of one coding
// instantiation, paired with the supplied decoder complexity.
RdcPoint aggregate(std::span<const RawMeasurement> measurements, double complexity_kmac);

}  // namespace rdc
