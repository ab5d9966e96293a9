#include "ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "csv.hpp"
#include "error.hpp"
#include "json_io.hpp"

namespace rdc {

namespace {

CodecSummary summarize(const CodecDataset& c) {
  CodecSummary s;
  s.name = c.name();
  s.mode = c.mode();
  s.n_points = c.points().size();
  s.rate_min = s.rate_max = c.points().front().rate;
  s.mse_min = s.mse_max = c.points().front().distortion;
  s.kmac_min = s.kmac_max = c.points().front().complexity;
  for (const RdcPoint& p : c.points()) {
    s.rate_min = std::min(s.rate_min, p.rate);
    s.rate_max = std::max(s.rate_max, p.rate);
    s.mse_min = std::min(s.mse_min, p.distortion);
    s.mse_max = std::max(s.mse_max, p.distortion);
    s.kmac_min = std::min(s.kmac_min, p.complexity);
    s.kmac_max = std::max(s.kmac_max, p.complexity);
  }
  return s;
}

}  // namespace

IngestResult ingest_dataset_file(const std::string& path) {
  IngestResult out;
  out.codecs = load_dataset(path);
  if (out.codecs.empty()) {
    fail(ErrorKind::invariant, path + ": dataset contains no codecs");
  }
  out.report.source_kind = "dataset";
  out.report.inputs.push_back(path);
  for (const CodecDataset& c : out.codecs) out.report.codecs.push_back(summarize(c));
  return out;
}

IngestResult ingest_raw_csv(const std::vector<std::string>& csv_paths,
                            const std::vector<double>& complexities,
                            const std::string& codec_name, DatasetMode mode) {
  if (csv_paths.empty()) {
    fail(ErrorKind::invalid_argument, "raw ingestion: no input files");
  }
  if (complexities.size() != 1 && complexities.size() != csv_paths.size()) {
    fail(ErrorKind::invalid_argument,
         "raw ingestion: need one complexity value, or one per input file (" +
             std::to_string(csv_paths.size()) + " files, " +
             std::to_string(complexities.size()) + " complexities)");
  }

  IngestResult out;
  out.report.source_kind = "raw-csv";
  out.report.inputs = csv_paths;
  out.report.rate_mbps_per_bpp = 1920.0 * 1080.0 * 30.0 / 1e6;

  std::map<long long, std::size_t> depth_rows;
  std::vector<RdcPoint> points;
  for (std::size_t i = 0; i < csv_paths.size(); ++i) {
    const std::vector<RawMeasurement> rows = load_raw_csv(csv_paths[i]);
    for (const RawMeasurement& m : rows) ++depth_rows[m.bit_depth];
    const double kmac = complexities.size() == 1 ? complexities[0] : complexities[i];
    points.push_back(aggregate(rows, kmac));
  }
  for (const auto& [depth, count] : depth_rows) {
    out.report.scalings.push_back(
        {depth, count, std::exp2(2.0 * static_cast<double>(depth - 8))});
  }

  if (mode == DatasetMode::curve) {
    std::stable_sort(points.begin(), points.end(),
                     [](const RdcPoint& a, const RdcPoint& b) { return a.rate < b.rate; });
  }
  out.codecs.emplace_back(codec_name, std::move(points), mode);
  out.report.codecs.push_back(summarize(out.codecs.front()));
  return out;
}

std::string ingest_report_to_json(const IngestReport& report) {
  nlohmann::json doc;
  doc["source_kind"] = report.source_kind;
  doc["inputs"] = report.inputs;
  nlohmann::json codecs = nlohmann::json::array();
  for (const CodecSummary& s : report.codecs) {
    nlohmann::json c;
    c["name"] = s.name;
    c["mode"] = to_string(s.mode);
    c["points"] = s.n_points;
    c["rate_mbps"] = {{"min", s.rate_min}, {"max", s.rate_max}};
    c["mse"] = {{"min", s.mse_min}, {"max", s.mse_max}};
    c["kmac_per_pixel"] = {{"min", s.kmac_min}, {"max", s.kmac_max}};
    codecs.push_back(std::move(c));
  }
  doc["codecs"] = std::move(codecs);
  if (report.source_kind == "raw-csv") {
    nlohmann::json norm;
    norm["rate"] = {{"description", "bits_per_pixel denormalized for 1920x1080 @ 30 Hz"},
                    {"mbps_per_bpp", report.rate_mbps_per_bpp}};
    nlohmann::json scalings = nlohmann::json::array();
    for (const BitDepthScaling& s : report.scalings) {
      scalings.push_back(
          {{"bit_depth", s.bit_depth}, {"rows", s.rows}, {"mse_divisor", s.mse_divisor}});
    }
    norm["mse_bit_depth_scaling"] = std::move(scalings);
    doc["normalizations"] = std::move(norm);
  }
  return doc.dump(2) + "\n";
}

}  // namespace rdc
