#pragma once

#include <string>
#include <vector>

#include "appspace.hpp"
#include "dataset.hpp"

namespace rdc {

// Canonical dataset document: a top-level list of codec entries
// {name, mode, complexity_kmac_per_pixel?, points: [{rate_mbps, mse,
// kmac_per_pixel?}]}. A codec-level complexity is replicated to points that
// lack their own; a point with both must agree. Curve-mode points are sorted
// by rate on load, with ties rejected. Duplicate codec names are rejected.
std::vector<CodecDataset> parse_dataset(const std::string& json_text,
                                        const std::string& source_name);
std::vector<CodecDataset> load_dataset(const std::string& path);

std::string dataset_to_json(const std::vector<CodecDataset>& codecs);
void save_dataset(const std::vector<CodecDataset>& codecs, const std::string& path);

// Application model document with the ApplicationModel field names verbatim.
ApplicationModel parse_app_model(const std::string& json_text, const std::string& source_name);
ApplicationModel load_app_model(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rdc
