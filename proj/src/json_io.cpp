#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& source_name) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    fail(ErrorKind::parse, source_name + ": not valid JSON");
  }
  return doc;
}

double get_number(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(ErrorKind::parse, ctx + ": missing field \"" + key + "\"");
  }
  if (!it->is_number()) {
    fail(ErrorKind::parse, ctx + ": field \"" + key + "\" must be a number");
  }
  return it->get<double>();
}

std::string get_string(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(ErrorKind::parse, ctx + ": missing field \"" + key + "\"");
  }
  if (!it->is_string()) {
    fail(ErrorKind::parse, ctx + ": field \"" + key + "\" must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::vector<CodecDataset> parse_dataset(const std::string& json_text,
                                        const std::string& source_name) {
  const json doc = parse_json(json_text, source_name);
  if (!doc.is_array()) {
    fail(ErrorKind::parse, source_name + ": expected a top-level list of codec entries");
  }
  std::vector<CodecDataset> codecs;
  std::set<std::string> names;
  for (std::size_t ci = 0; ci < doc.size(); ++ci) {
    const json& entry = doc[ci];
    const std::string ctx = source_name + ": codec entry " + std::to_string(ci);
    if (!entry.is_object()) {
      fail(ErrorKind::parse, ctx + ": expected an object");
    }
    const std::string name = get_string(entry, "name", ctx);
    const DatasetMode mode = dataset_mode_from_string(get_string(entry, "mode", ctx));
    if (!names.insert(name).second) {
      fail(ErrorKind::duplicate_name, source_name + ": duplicate codec name \"" + name + "\"");
    }

    bool has_codec_complexity = false;
    double codec_complexity = 0.0;
    if (entry.contains("complexity_kmac_per_pixel")) {
      codec_complexity = get_number(entry, "complexity_kmac_per_pixel", ctx);
      has_codec_complexity = true;
    }

    auto points_it = entry.find("points");
    if (points_it == entry.end() || !points_it->is_array()) {
      fail(ErrorKind::parse, ctx + " (\"" + name + "\"): missing \"points\" list");
    }
    std::vector<RdcPoint> points;
    for (std::size_t pi = 0; pi < points_it->size(); ++pi) {
      const json& jp = (*points_it)[pi];
      const std::string pctx = ctx + " (\"" + name + "\") point " + std::to_string(pi);
      if (!jp.is_object()) {
        fail(ErrorKind::parse, pctx + ": expected an object");
      }
      RdcPoint p;
      p.rate = get_number(jp, "rate_mbps", pctx);
      p.distortion = get_number(jp, "mse", pctx);
      if (jp.contains("kmac_per_pixel")) {
        p.complexity = get_number(jp, "kmac_per_pixel", pctx);
        if (has_codec_complexity && p.complexity != codec_complexity) {
          fail(ErrorKind::invariant,
               pctx + ": kmac_per_pixel " + format_double(p.complexity) +
                   " conflicts with codec-level complexity " + format_double(codec_complexity));
        }
      } else if (has_codec_complexity) {
        p.complexity = codec_complexity;
      } else {
        fail(ErrorKind::parse,
             pctx + ": no kmac_per_pixel and no codec-level complexity_kmac_per_pixel");
      }
      points.push_back(p);
    }
    if (mode == DatasetMode::curve) {
      std::stable_sort(points.begin(), points.end(),
                       [](const RdcPoint& a, const RdcPoint& b) { return a.rate < b.rate; });
      for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1].rate == points[i].rate) {
          fail(ErrorKind::invariant, ctx + " (\"" + name + "\"): two curve points share rate " +
                                         format_double(points[i].rate));
        }
      }
    }
    codecs.emplace_back(name, std::move(points), mode);
  }
  return codecs;
}

std::vector<CodecDataset> load_dataset(const std::string& path) {
  return parse_dataset(read_text_file(path), path);
}

std::string dataset_to_json(const std::vector<CodecDataset>& codecs) {
  json doc = json::array();
  for (const CodecDataset& c : codecs) {
    json entry;
    entry["name"] = c.name();
    entry["mode"] = to_string(c.mode());
    const bool uniform = std::all_of(
        c.points().begin(), c.points().end(),
        [&](const RdcPoint& p) { return p.complexity == c.points().front().complexity; });
    if (uniform) {
      entry["complexity_kmac_per_pixel"] = c.points().front().complexity;
    }
    json points = json::array();
    for (const RdcPoint& p : c.points()) {
      json jp;
      jp["rate_mbps"] = p.rate;
      jp["mse"] = p.distortion;
      jp["kmac_per_pixel"] = p.complexity;
      points.push_back(std::move(jp));
    }
    entry["points"] = std::move(points);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

void save_dataset(const std::vector<CodecDataset>& codecs, const std::string& path) {
  write_text_file(path, dataset_to_json(codecs));
}

ApplicationModel parse_app_model(const std::string& json_text, const std::string& source_name) {
  const json doc = parse_json(json_text, source_name);
  if (!doc.is_object()) {
    fail(ErrorKind::parse, source_name + ": expected an application model object");
  }
  ApplicationModel m;
  m.n_users = get_number(doc, "n_users", source_name);
  m.hours = get_number(doc, "hours", source_name);
  m.energy_price = get_number(doc, "energy_price", source_name);
  m.data_price = get_number(doc, "data_price", source_name);
  m.gpu_cost = get_number(doc, "gpu_cost", source_name);
  m.gpu_capacity = get_number(doc, "gpu_capacity", source_name);
  m.gpu_power = get_number(doc, "gpu_power", source_name);
  m.ref_complexity = get_number(doc, "ref_complexity", source_name);
  m.ref_rate = get_number(doc, "ref_rate", source_name);
  m.revenue_multiplier = get_number(doc, "revenue_multiplier", source_name);
  m.psnr_full = get_number(doc, "psnr_full", source_name);
  m.psnr_none = get_number(doc, "psnr_none", source_name);
  validate(m);
  return m;
}

ApplicationModel load_app_model(const std::string& path) {
  return parse_app_model(read_text_file(path), path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorKind::io, "cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) {
    fail(ErrorKind::io, "error reading \"" + path + "\"");
  }
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(ErrorKind::io, "cannot open \"" + path + "\" for writing");
  }
  out << content;
  out.flush();
  if (!out.good()) {
    fail(ErrorKind::io, "error writing \"" + path + "\"");
  }
}

}  // namespace rdc
