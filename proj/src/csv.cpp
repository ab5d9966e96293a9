#include "csv.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

namespace {

constexpr const char* kHeader = "sequence_id,width,height,frame_rate,bit_depth,bits_per_pixel,mse";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  fields.push_back(current);
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::vector<RawMeasurement> parse_raw_csv(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(ErrorKind::parse, source_name + ": empty file, expected header \"" + kHeader + "\"");
  }
  if (strip_cr(line) != kHeader) {
    fail(ErrorKind::parse, source_name + ": bad header, expected \"" + kHeader + "\"");
  }
  std::vector<RawMeasurement> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 7) {
      fail(ErrorKind::parse,
           where + ": expected 7 fields, got " + std::to_string(f.size()));
    }
    RawMeasurement m;
    m.sequence_id = f[0];
    m.width = parse_int(f[1], where + " width");
    m.height = parse_int(f[2], where + " height");
    m.frame_rate = parse_double(f[3], where + " frame_rate");
    m.bit_depth = parse_int(f[4], where + " bit_depth");
    m.bits_per_pixel = parse_double(f[5], where + " bits_per_pixel");
    m.mse = parse_double(f[6], where + " mse");
    validate(m);
    rows.push_back(std::move(m));
  }
  if (rows.empty()) {
    fail(ErrorKind::parse, source_name + ": no measurement rows");
  }
  return rows;
}

std::vector<RawMeasurement> load_raw_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorKind::io, "cannot open \"" + path + "\"");
  }
  return parse_raw_csv(in, path);
}

}  // namespace rdc
