#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dataset.hpp"

namespace rdc {

// Raw measurement CSV: exact header
// sequence_id,width,height,frame_rate,bit_depth,bits_per_pixel,mse
// one row per sequence, '.' decimal point, UTF-8. Every row is validated.
std::vector<RawMeasurement> parse_raw_csv(std::istream& in, const std::string& source_name);
std::vector<RawMeasurement> load_raw_csv(const std::string& path);

}  // namespace rdc
