#pragma once

#include <string>
#include <vector>

#include "dataset.hpp"

namespace rdc {

// What a validation/normalization pass saw, for the ingest report.
struct CodecSummary {
  std::string name;
  DatasetMode mode = DatasetMode::cloud;
  std::size_t n_points = 0;
  double rate_min = 0.0, rate_max = 0.0;
  double mse_min = 0.0, mse_max = 0.0;
  double kmac_min = 0.0, kmac_max = 0.0;
};

struct BitDepthScaling {
  long long bit_depth = 0;
  std::size_t rows = 0;
  double mse_divisor = 1.0;
};

struct IngestReport {
  std::string source_kind;  // "dataset" or "raw-csv"
  std::vector<std::string> inputs;
  std::vector<CodecSummary> codecs;
  // raw-csv only:
  std::vector<BitDepthScaling> scalings;
  double rate_mbps_per_bpp = 0.0;  // the 1920*1080*30/1e6 denormalization factor
};

struct IngestResult {
  std::vector<CodecDataset> codecs;
  IngestReport report;
};

// Validate and normalize an existing dataset document.
IngestResult ingest_dataset_file(const std::string& path);

// Build one codec from raw measurement CSVs, one file per coding
// instantiation. complexities carries either one value per file or a single
// value replicated. Curve mode sorts the aggregated points by rate.
IngestResult ingest_raw_csv(const std::vector<std::string>& csv_paths,
                            const std::vector<double>& complexities,
                            const std::string& codec_name, DatasetMode mode);

std::string ingest_report_to_json(const IngestReport& report);

}  // namespace rdc
