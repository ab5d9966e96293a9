// rdcbench command-line front end. Links the C API only; all analysis lives
// behind rdcbench.h.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdcbench.h"

namespace {

namespace fs = std::filesystem;

struct CliError {
  rdcb_status status;
  std::string message;
};

[[noreturn]] void throw_last(rdcb_status status) {
  throw CliError{status, rdcb_last_error()};
}

void check(rdcb_status status) {
  if (status != RDCB_OK) throw_last(status);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

void emit_error_record(const CliError& e) {
  std::cerr << "{\"error\":\"" << rdcb_status_name(e.status) << "\",\"message\":\""
            << json_escape(e.message) << "\"}\n";
}

struct DatasetHandle {
  rdcb_dataset* ds = nullptr;
  ~DatasetHandle() { rdcb_dataset_free(ds); }
};

struct GridHandle {
  rdcb_grid* grid = nullptr;
  ~GridHandle() { rdcb_grid_free(grid); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { rdcb_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

unsigned threads_from_env() {
  const char* env = std::getenv("RDC_BENCH_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1) {
    throw CliError{RDCB_ERR_INVALID_ARGUMENT,
                   std::string("RDC_BENCH_THREADS must be a positive integer, got \"") + env +
                       "\""};
  }
  return static_cast<unsigned>(v);
}

void ensure_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw CliError{RDCB_ERR_IO, "cannot create output directory \"" + dir + "\": " + ec.message()};
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out.good()) {
    throw CliError{RDCB_ERR_IO, "cannot write \"" + path + "\""};
  }
}

bool looks_like_raw_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string head;
  std::getline(in, head);
  return head.rfind("sequence_id,", 0) == 0;
}

// "lo:hi:step" in dB
void parse_db_range(const std::string& text, double& lo, double& hi, double& step) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw CliError{RDCB_ERR_PARSE, "bad range \"" + text + "\", expected lo:hi:step"};
  }
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, first);
    const std::string b = text.substr(first + 1, second - first - 1);
    const std::string c = text.substr(second + 1);
    lo = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    hi = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    step = std::stod(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::exception&) {
    throw CliError{RDCB_ERR_PARSE, "bad range \"" + text + "\", expected lo:hi:step"};
  }
}

double parse_lambda_flag(const std::string& text) {
  if (text == "inf" || text == "infinity") return HUGE_VAL;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CliError{RDCB_ERR_PARSE, "bad lambda \"" + text + "\" (number or inf)"};
  }
}

int scale_from_flag(const std::string& s) {
  if (s == "mse-db") return RDCB_SCALE_MSE_DB;
  if (s == "linear") return RDCB_SCALE_LINEAR;
  throw CliError{RDCB_ERR_PARSE, "bad --distortion-scale \"" + s + "\" (mse-db or linear)"};
}

int plane_from_flag(const std::string& s) {
  if (s == "RD" || s == "rd") return RDCB_PLANE_RD;
  if (s == "RC" || s == "rc") return RDCB_PLANE_RC;
  if (s == "DC" || s == "dc") return RDCB_PLANE_DC;
  throw CliError{RDCB_ERR_PARSE, "bad --plane \"" + s + "\" (RD, RC or DC)"};
}

int reducer_from_flag(const std::string& s) {
  if (s == "min") return RDCB_REDUCER_MIN;
  if (s == "mean") return RDCB_REDUCER_MEAN;
  throw CliError{RDCB_ERR_PARSE, "bad --reducer \"" + s + "\" (min or mean)"};
}

int cost_kind_from_flag(const std::string& s) {
  if (s == "cloud") return RDCB_COST_CLOUD;
  if (s == "curve") return RDCB_COST_CURVE;
  throw CliError{RDCB_ERR_PARSE, "bad --cost-kind \"" + s + "\" (cloud or curve)"};
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const std::string& s : v) out.push_back(s.c_str());
  return out;
}

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string output_dir = ".";
  std::string codec_name;
  std::vector<double> complexities;
  std::string mode = "auto";
};

int run_ingest(const IngestArgs& args) {
  DatasetHandle ds;
  OwnedString report;
  const bool raw = looks_like_raw_csv(args.inputs.front());
  if (raw) {
    if (args.codec_name.empty() || args.complexities.empty()) {
      throw CliError{RDCB_ERR_INVALID_ARGUMENT,
                     "raw CSV ingestion needs --codec and --complexity"};
    }
    int mode = RDCB_MODE_CLOUD;
    if (args.mode == "curve") {
      mode = RDCB_MODE_CURVE;
    } else if (args.mode == "auto") {
      mode = args.inputs.size() >= 2 ? RDCB_MODE_CURVE : RDCB_MODE_CLOUD;
    } else if (args.mode != "cloud") {
      throw CliError{RDCB_ERR_PARSE, "bad --mode \"" + args.mode + "\" (curve, cloud or auto)"};
    }
    const auto paths = c_strings(args.inputs);
    check(rdcb_ingest_raw_csv(paths.data(), paths.size(), args.complexities.data(),
                              args.complexities.size(), args.codec_name.c_str(), mode, &ds.ds,
                              &report.s));
  } else {
    if (args.inputs.size() != 1) {
      throw CliError{RDCB_ERR_INVALID_ARGUMENT, "dataset ingestion takes exactly one --input"};
    }
    check(rdcb_ingest_dataset(args.inputs.front().c_str(), &ds.ds, &report.s));
  }
  ensure_output_dir(args.output_dir);
  const std::string dataset_path = (fs::path(args.output_dir) / "dataset.json").string();
  check(rdcb_dataset_save(ds.ds, dataset_path.c_str()));
  write_file((fs::path(args.output_dir) / "ingest_report.json").string(), report.str());
  std::cout << report.str();
  return 0;
}

struct BdArgs {
  std::string input;
  std::vector<std::string> codecs;
  std::string output_dir;
  std::string lambda_text;
  std::string plane = "RD";
  std::string scale = "mse-db";
};

int run_bd(const BdArgs& args) {
  if (args.codecs.size() != 2) {
    throw CliError{RDCB_ERR_INVALID_ARGUMENT, "bd needs exactly two --codec flags"};
  }
  DatasetHandle ds;
  check(rdcb_dataset_load(args.input.c_str(), &ds.ds));
  const double lambda = args.lambda_text.empty() ? std::nan("") : parse_lambda_flag(args.lambda_text);
  OwnedString report;
  check(rdcb_bd_report_json(ds.ds, args.codecs[0].c_str(), args.codecs[1].c_str(),
                            scale_from_flag(args.scale), plane_from_flag(args.plane), lambda,
                            &report.s));
  std::cout << report.str();
  if (!args.output_dir.empty()) {
    ensure_output_dir(args.output_dir);
    write_file((fs::path(args.output_dir) / "bd_report.json").string(), report.str());
  }
  return 0;
}

struct CostArgs {
  std::string input;
  std::vector<std::string> codecs;
  std::string output_dir;
  double lambda = std::nan("");
  double gamma = std::nan("");
  std::string app_model;
  bool paper_rounding = false;
  std::string reducer = "min";
  std::string cost_kind;  // empty = per dataset mode
};

int run_cost(const CostArgs& args) {
  DatasetHandle ds;
  check(rdcb_dataset_load(args.input.c_str(), &ds.ds));
  double lambda = args.lambda;
  double gamma = args.gamma;
  std::string app_point_json;
  if (!args.app_model.empty()) {
    rdcb_app_model model;
    check(rdcb_app_model_load(args.app_model.c_str(), &model));
    rdcb_app_point point;
    check(rdcb_app_calculator(&model, args.paper_rounding ? 1 : 0, &point));
    lambda = point.lambda;
    gamma = point.gamma;
    OwnedString point_json;
    check(rdcb_app_point_json(&point, args.paper_rounding ? 1 : 0, &point_json.s));
    app_point_json = point_json.str();
  }
  if (std::isnan(lambda) || std::isnan(gamma)) {
    throw CliError{RDCB_ERR_INVALID_ARGUMENT,
                   "cost needs --lambda and --gamma, or --app-model"};
  }
  const int kind = args.cost_kind.empty() ? -1 : cost_kind_from_flag(args.cost_kind);
  const auto names = c_strings(args.codecs);
  OwnedString report;
  check(rdcb_cost_report_json(ds.ds, names.data(), names.size(), lambda, gamma,
                              reducer_from_flag(args.reducer), kind, &report.s));
  if (!app_point_json.empty()) std::cout << app_point_json;
  std::cout << report.str();
  if (!args.output_dir.empty()) {
    ensure_output_dir(args.output_dir);
    write_file((fs::path(args.output_dir) / "cost_report.json").string(), report.str());
    if (!app_point_json.empty()) {
      write_file((fs::path(args.output_dir) / "app_point.json").string(), app_point_json);
    }
  }
  return 0;
}

struct AppCalcArgs {
  std::string app_model;
  bool paper_rounding = false;
  std::string output_dir;
};

int run_appcalc(const AppCalcArgs& args) {
  rdcb_app_model model;
  check(rdcb_app_model_load(args.app_model.c_str(), &model));
  rdcb_app_point point;
  check(rdcb_app_calculator(&model, args.paper_rounding ? 1 : 0, &point));
  OwnedString json;
  check(rdcb_app_point_json(&point, args.paper_rounding ? 1 : 0, &json.s));
  std::cout << json.str();
  if (!args.output_dir.empty()) {
    ensure_output_dir(args.output_dir);
    write_file((fs::path(args.output_dir) / "app_point.json").string(), json.str());
  }
  return 0;
}

struct AppMapArgs {
  std::string input;
  std::vector<std::string> codecs;
  std::string output_dir = ".";
  std::string lambda_range;
  std::string gamma_range;
  std::string reducer = "min";
  std::string cost_kind = "cloud";
  std::string app_model;
  bool paper_rounding = false;
  bool mark_app_point = false;
  double lambda = std::nan("");
  double gamma = std::nan("");
};

int run_appmap(const AppMapArgs& args) {
  DatasetHandle loaded;
  check(rdcb_dataset_load(args.input.c_str(), &loaded.ds));
  DatasetHandle selected;
  rdcb_dataset* ds = loaded.ds;
  if (!args.codecs.empty()) {
    const auto names = c_strings(args.codecs);
    check(rdcb_dataset_select(loaded.ds, names.data(), names.size(), &selected.ds));
    ds = selected.ds;
  }
  if (rdcb_codec_count(ds) < 2) {
    throw CliError{RDCB_ERR_INVALID_ARGUMENT, "appmap needs at least 2 codecs"};
  }

  rdcb_grid_spec spec;
  rdcb_grid_spec_default(&spec);
  if (!args.lambda_range.empty()) {
    parse_db_range(args.lambda_range, spec.lambda_db_lo, spec.lambda_db_hi, spec.lambda_db_step);
  }
  if (!args.gamma_range.empty()) {
    parse_db_range(args.gamma_range, spec.gamma_db_lo, spec.gamma_db_hi, spec.gamma_db_step);
  }

  std::optional<std::pair<double, double>> mark;
  std::string app_point_json;
  if (!args.app_model.empty()) {
    rdcb_app_model model;
    check(rdcb_app_model_load(args.app_model.c_str(), &model));
    rdcb_app_point point;
    check(rdcb_app_calculator(&model, args.paper_rounding ? 1 : 0, &point));
    OwnedString point_json;
    check(rdcb_app_point_json(&point, args.paper_rounding ? 1 : 0, &point_json.s));
    app_point_json = point_json.str();
    mark = {point.lambda, point.gamma};
  } else if (!std::isnan(args.lambda) && !std::isnan(args.gamma)) {
    mark = {args.lambda, args.gamma};
  }
  if (args.mark_app_point && !mark) {
    throw CliError{RDCB_ERR_INVALID_ARGUMENT,
                   "--mark-app-point needs --app-model or --lambda/--gamma"};
  }

  GridHandle grid;
  check(rdcb_cost_surface(ds, &spec, reducer_from_flag(args.reducer),
                          cost_kind_from_flag(args.cost_kind), threads_from_env(), &grid.grid));

  ensure_output_dir(args.output_dir);
  const fs::path dir(args.output_dir);
  for (size_t i = 0; i < rdcb_grid_codec_count(grid.grid); ++i) {
    // file names mirror the codec names, sanitized
    std::string tag = rdcb_grid_codec_name(grid.grid, i);
    for (char& ch : tag) {
      const bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                      (ch >= '0' && ch <= '9') || ch == '.' || ch == '_' || ch == '-';
      if (!ok) ch = '_';
    }
    check(rdcb_grid_write_surface_csv(grid.grid, i,
                                      (dir / ("surface_" + tag + ".csv")).string().c_str()));
    check(rdcb_grid_write_surface_svg(grid.grid, i,
                                      (dir / ("surface_" + tag + ".svg")).string().c_str()));
  }
  if (rdcb_grid_codec_count(grid.grid) == 2) {
    check(rdcb_grid_write_difference_csv(grid.grid, 0, 1, (dir / "difference.csv").string().c_str()));
    check(rdcb_grid_write_difference_json(grid.grid, 0, 1,
                                          (dir / "difference.json").string().c_str()));
    check(rdcb_grid_write_difference_svg(grid.grid, 0, 1, (dir / "difference.svg").string().c_str()));
  }
  check(rdcb_grid_write_best_map_csv(grid.grid, (dir / "best_map.csv").string().c_str()));
  check(rdcb_grid_write_best_map_json(grid.grid, (dir / "best_map.json").string().c_str()));
  double mark_values[2];
  const double* mark_ptr = nullptr;
  if (args.mark_app_point && mark) {
    mark_values[0] = mark->first;
    mark_values[1] = mark->second;
    mark_ptr = mark_values;
  }
  check(rdcb_grid_write_best_map_svg(grid.grid, (dir / "best_map.svg").string().c_str(), mark_ptr));
  check(rdcb_grid_write_json(grid.grid, (dir / "appmap.json").string().c_str()));
  if (!app_point_json.empty()) {
    write_file((dir / "app_point.json").string(), app_point_json);
    std::cout << app_point_json;
  }
  std::cout << "wrote appmap artifacts to " << args.output_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rate-distortion-complexity analysis of video codecs"};
  app.require_subcommand(1);

  IngestArgs ingest;
  CLI::App* cmd_ingest = app.add_subcommand(
      "ingest", "validate and normalize measurements into a canonical dataset");
  cmd_ingest->add_option("--input", ingest.inputs, "dataset JSON or raw measurement CSV(s)")
      ->required();
  cmd_ingest->add_option("--output-dir", ingest.output_dir, "where to write dataset.json");
  cmd_ingest->add_option("--codec", ingest.codec_name, "codec name for raw CSV ingestion");
  cmd_ingest->add_option("--complexity", ingest.complexities,
                         "decoder kMAC/pixel, one value or one per input");
  cmd_ingest->add_option("--mode", ingest.mode, "curve, cloud or auto (default auto)");

  BdArgs bd;
  CLI::App* cmd_bd = app.add_subcommand("bd", "Bjontegaard deltas for a codec pair");
  cmd_bd->add_option("--input", bd.input, "dataset JSON")->required();
  cmd_bd->add_option("--codec", bd.codecs, "exactly two codec names");
  cmd_bd->add_option("--lambda", bd.lambda_text, "intermediate direction (number or inf)");
  cmd_bd->add_option("--plane", bd.plane, "RD, RC or DC (default RD)");
  cmd_bd->add_option("--distortion-scale", bd.scale, "mse-db or linear (default mse-db)");
  cmd_bd->add_option("--output-dir", bd.output_dir, "also write bd_report.json here");

  CostArgs cost;
  CLI::App* cmd_cost = app.add_subcommand("cost", "Lagrangian RDC cost at one (lambda, gamma)");
  cmd_cost->add_option("--input", cost.input, "dataset JSON")->required();
  cmd_cost->add_option("--codec", cost.codecs, "codec subset (default: all)");
  cmd_cost->add_option("--lambda", cost.lambda, "rate weight");
  cmd_cost->add_option("--gamma", cost.gamma, "complexity weight");
  cmd_cost->add_option("--app-model", cost.app_model, "derive lambda/gamma from this model file");
  cmd_cost->add_flag("--paper-rounding", cost.paper_rounding,
                     "reproduce the worked example's intermediate rounding");
  cmd_cost->add_option("--reducer", cost.reducer, "min or mean (default min)");
  cmd_cost->add_option("--cost-kind", cost.cost_kind, "cloud or curve (default: per dataset mode)");
  cmd_cost->add_option("--output-dir", cost.output_dir, "also write cost_report.json here");

  AppCalcArgs appcalc;
  CLI::App* cmd_appcalc =
      app.add_subcommand("appcalc", "application model to (lambda, gamma) calculator");
  cmd_appcalc->add_option("--app-model", appcalc.app_model, "application model JSON")->required();
  cmd_appcalc->add_flag("--paper-rounding", appcalc.paper_rounding,
                        "reproduce the worked example's intermediate rounding");
  cmd_appcalc->add_option("--output-dir", appcalc.output_dir, "also write app_point.json here");

  AppMapArgs appmap;
  CLI::App* cmd_appmap =
      app.add_subcommand("appmap", "cost surfaces and best-codec map over application space");
  cmd_appmap->add_option("--input", appmap.input, "dataset JSON")->required();
  cmd_appmap->add_option("--codec", appmap.codecs, "codec subset (default: all)");
  cmd_appmap->add_option("--output-dir", appmap.output_dir, "artifact directory")->required();
  cmd_appmap->add_option("--lambda-db-range", appmap.lambda_range, "lo:hi:step in dB");
  cmd_appmap->add_option("--gamma-db-range", appmap.gamma_range, "lo:hi:step in dB");
  cmd_appmap->add_option("--reducer", appmap.reducer, "min or mean (default min)");
  cmd_appmap->add_option("--cost-kind", appmap.cost_kind, "cloud or curve (default cloud)");
  cmd_appmap->add_option("--app-model", appmap.app_model, "application model JSON");
  cmd_appmap->add_flag("--paper-rounding", appmap.paper_rounding,
                       "reproduce the worked example's intermediate rounding");
  cmd_appmap->add_flag("--mark-app-point", appmap.mark_app_point,
                       "mark the application point on the best-codec map");
  cmd_appmap->add_option("--lambda", appmap.lambda, "application point rate weight");
  cmd_appmap->add_option("--gamma", appmap.gamma, "application point complexity weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      emit_error_record({RDCB_ERR_INVALID_ARGUMENT, e.what()});
    }
    return app.exit(e);
  }

  try {
    if (cmd_ingest->parsed()) return run_ingest(ingest);
    if (cmd_bd->parsed()) return run_bd(bd);
    if (cmd_cost->parsed()) return run_cost(cost);
    if (cmd_appcalc->parsed()) return run_appcalc(appcalc);
    if (cmd_appmap->parsed()) return run_appmap(appmap);
  } catch (const CliError& e) {
    emit_error_record(e);
    return static_cast<int>(e.status);
  } catch (const std::exception& e) {
    emit_error_record({RDCB_ERR_INTERNAL, e.what()});
    return static_cast<int>(RDCB_ERR_INTERNAL);
  }
  return 0;
}
