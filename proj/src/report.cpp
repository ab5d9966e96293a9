#include "report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "numfmt.hpp"
#include "svg.hpp"

namespace rdc {

namespace {

using nlohmann::json;

json bd_result_to_json(const std::string& metric, const BdResult& r) {
  json j;
  j["metric"] = metric;
  j["value"] = r.value;
  j["t0"] = r.t0;
  j["t1"] = r.t1;
  j["plane"] = to_string(r.axis_spec.plane);
  j["theta"] = r.axis_spec.theta;
  j["distortion_scale"] = to_string(r.axis_spec.distortion_scale);
  return j;
}

// Metric names follow the plane: lambda = 0 measures the second coordinate
// against the first, lambda = inf the reverse.
std::pair<std::string, std::string> axis_metric_names(Plane plane) {
  switch (plane) {
    case Plane::rd: return {"delta_D_R", "delta_R_D"};
    case Plane::rc: return {"delta_C_R", "delta_R_C"};
    case Plane::dc: return {"delta_C_D", "delta_D_C"};
  }
  return {"?", "?"};
}

std::string matrix_csv(const Mat<double>& m, const std::vector<double>& lambda_axis,
                       const std::vector<double>& gamma_axis) {
  std::ostringstream out;
  for (double l : lambda_axis) out << "," << format_double(l);
  out << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << format_double(gamma_axis[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) out << "," << format_double(m.at(r, c));
    out << "\n";
  }
  return out.str();
}

json grid_metadata(const AppSpaceGrid& grid) {
  json j;
  j["lambda_db_axis"] = grid.lambda_db_axis;
  j["gamma_db_axis"] = grid.gamma_db_axis;
  j["codecs"] = grid.codec_names;
  j["reducer"] = to_string(grid.reducer);
  j["cost_kind"] = to_string(grid.cost_kind);
  return j;
}

json matrix_rows(const Mat<double>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_codec_index(const AppSpaceGrid& grid, std::size_t codec) {
  if (codec >= grid.cost_surfaces.size()) {
    fail(ErrorKind::invalid_argument,
         "grid: codec index " + std::to_string(codec) + " out of range");
  }
}

}  // namespace

const CodecDataset& find_codec(const std::vector<CodecDataset>& codecs, const std::string& name) {
  for (const CodecDataset& c : codecs) {
    if (c.name() == name) return c;
  }
  fail(ErrorKind::invalid_argument, "unknown codec \"" + name + "\"");
}

std::string bd_report_json(const std::vector<CodecDataset>& codecs, const std::string& codec_a,
                           const std::string& codec_b, DistortionScale scale, Plane plane,
                           std::optional<double> lambda) {
  const CodecDataset& a = find_codec(codecs, codec_a);
  const CodecDataset& b = find_codec(codecs, codec_b);
  json doc;
  doc["codec_a"] = codec_a;
  doc["codec_b"] = codec_b;
  doc["distortion_scale"] = to_string(scale);
  json results = json::array();

  const auto [rd_zero, rd_inf] = axis_metric_names(Plane::rd);
  results.push_back(bd_result_to_json(rd_zero, delta_3d(a, b, Plane::rd, 0.0, scale)));
  results.push_back(
      bd_result_to_json(rd_inf, delta_3d(a, b, Plane::rd, INFINITY, scale)));
  if (plane != Plane::rd) {
    const auto [p_zero, p_inf] = axis_metric_names(plane);
    results.push_back(bd_result_to_json(p_zero, delta_3d(a, b, plane, 0.0, scale)));
    results.push_back(bd_result_to_json(p_inf, delta_3d(a, b, plane, INFINITY, scale)));
  }
  if (lambda) {
    const std::string name =
        std::string("delta_") + to_string(plane) + "(lambda=" + format_double(*lambda) + ")";
    results.push_back(bd_result_to_json(name, delta_3d(a, b, plane, *lambda, scale)));
  }
  doc["results"] = std::move(results);
  // Conventional %-savings BD-rate, computed on log10(rate) ordinates; not
  // one of the Delta metrics.
  doc["conventional_bd_rate_percent"] = bd_rate_percent(a, b, scale);
  return doc.dump(2) + "\n";
}

std::string cost_report_json(const std::vector<CodecDataset>& codecs,
                             const std::vector<std::string>& subset, double lambda, double gamma,
                             Reducer reducer, std::optional<CostKind> cost_kind,
                             const AppPoint* app_point) {
  const CostPlane plane(lambda, gamma);
  std::vector<const CodecDataset*> selected;
  if (subset.empty()) {
    for (const CodecDataset& c : codecs) selected.push_back(&c);
  } else {
    for (const std::string& name : subset) selected.push_back(&find_codec(codecs, name));
  }

  json doc;
  doc["lambda"] = lambda;
  doc["gamma"] = gamma;
  doc["reducer"] = to_string(reducer);
  if (app_point) doc["app_point"] = json::parse(app_point_to_json(*app_point));
  json entries = json::array();
  for (const CodecDataset* c : selected) {
    json e;
    e["codec"] = c->name();
    e["mode"] = to_string(c->mode());
    const CostKind kind = cost_kind.value_or(
        c->mode() == DatasetMode::curve ? CostKind::curve : CostKind::cloud);
    e["cost_kind"] = to_string(kind);
    if (kind == CostKind::curve) {
      const CurveCostBreakdown breakdown = curve_cost(*c, plane);
      e["cost"] = breakdown.total;
      json segs = json::array();
      for (const auto& s : breakdown.per_segment) {
        segs.push_back({{"length", s.length}, {"mean_distance", s.mean_distance}});
      }
      e["per_segment"] = std::move(segs);
    } else {
      e["cost"] = cloud_cost(*c, plane, reducer);
      e["per_point"] = cloud_costs(*c, plane);
    }
    entries.push_back(std::move(e));
  }
  doc["costs"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string app_point_to_json(const AppPoint& p) {
  json doc;
  doc["lambda"] = p.lambda;
  doc["gamma"] = p.gamma;
  doc["alpha1"] = p.alpha1;
  doc["alpha2"] = p.alpha2;
  doc["alpha3"] = p.alpha3;
  doc["paper_rounding"] = p.paper_rounding;
  json steps;
  steps["hw_per_kmac"] = p.hw_per_kmac;
  steps["energy_per_kmac_hour"] = p.energy_per_kmac_hour;
  steps["gb_per_mbps"] = p.gb_per_mbps;
  steps["operating_ref"] = p.operating_ref;
  steps["revenue"] = p.revenue;
  steps["delta_mse"] = p.delta_mse;
  doc["intermediate"] = std::move(steps);
  return doc.dump(2) + "\n";
}

std::string surface_csv(const AppSpaceGrid& grid, std::size_t codec) {
  check_codec_index(grid, codec);
  return matrix_csv(grid.surface_db(codec), grid.lambda_db_axis, grid.gamma_db_axis);
}

std::string difference_csv(const AppSpaceGrid& grid, std::size_t codec_a, std::size_t codec_b) {
  return matrix_csv(cost_difference(grid, codec_a, grid, codec_b, true), grid.lambda_db_axis,
                    grid.gamma_db_axis);
}

std::string best_map_csv(const AppSpaceGrid& grid) {
  const BestMap map = best_map(grid);
  std::ostringstream out;
  for (double l : grid.lambda_db_axis) out << "," << format_double(l);
  out << "\n";
  for (std::size_t r = 0; r < map.index.rows(); ++r) {
    out << format_double(grid.gamma_db_axis[r]);
    for (std::size_t c = 0; c < map.index.cols(); ++c) out << "," << map.index.at(r, c);
    out << "\n";
  }
  return out.str();
}

std::string grid_to_json(const AppSpaceGrid& grid) {
  json doc = grid_metadata(grid);
  json surfaces = json::array();
  for (std::size_t i = 0; i < grid.cost_surfaces.size(); ++i) {
    json s;
    s["codec"] = grid.codec_names[i];
    s["values_db"] = matrix_rows(grid.surface_db(i));
    surfaces.push_back(std::move(s));
  }
  doc["surfaces"] = std::move(surfaces);
  json best = json::array();
  for (std::size_t r = 0; r < grid.best.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < grid.best.cols(); ++c) row.push_back(grid.best.at(r, c));
    best.push_back(std::move(row));
  }
  doc["best_map"] = std::move(best);
  return doc.dump() + "\n";
}

std::string best_map_json(const AppSpaceGrid& grid) {
  const BestMap map = best_map(grid);
  json doc = grid_metadata(grid);
  json rows = json::array();
  for (std::size_t r = 0; r < map.index.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < map.index.cols(); ++c) row.push_back(map.index.at(r, c));
    rows.push_back(std::move(row));
  }
  doc["best_map"] = std::move(rows);
  json legend;
  for (std::size_t i = 0; i < grid.codec_names.size(); ++i) {
    legend[std::to_string(i)] = grid.codec_names[i];
  }
  doc["legend"] = std::move(legend);
  doc["winners"] = map.winners;
  return doc.dump(2) + "\n";
}

std::string difference_json(const AppSpaceGrid& grid, std::size_t codec_a, std::size_t codec_b) {
  check_codec_index(grid, codec_a);
  check_codec_index(grid, codec_b);
  json doc = grid_metadata(grid);
  doc["codec_a"] = grid.codec_names[codec_a];
  doc["codec_b"] = grid.codec_names[codec_b];
  doc["difference_db"] = matrix_rows(cost_difference(grid, codec_a, grid, codec_b, true));
  doc["difference_linear"] = matrix_rows(cost_difference(grid, codec_a, grid, codec_b, false));
  return doc.dump() + "\n";
}

std::string surface_svg(const AppSpaceGrid& grid, std::size_t codec) {
  check_codec_index(grid, codec);
  return svg::continuous_heatmap(grid.surface_db(codec), grid.lambda_db_axis, grid.gamma_db_axis,
                                 "Cost surface: " + grid.codec_names[codec] + " (" +
                                     to_string(grid.reducer) + ", " + to_string(grid.cost_kind) +
                                     ")",
                                 "10 log10(lambda) [dB]", "10 log10(gamma) [dB]", "J [dB]");
}

std::string difference_svg(const AppSpaceGrid& grid, std::size_t codec_a, std::size_t codec_b) {
  check_codec_index(grid, codec_a);
  check_codec_index(grid, codec_b);
  return svg::continuous_heatmap(
      cost_difference(grid, codec_a, grid, codec_b, true), grid.lambda_db_axis,
      grid.gamma_db_axis,
      "Cost difference: " + grid.codec_names[codec_a] + " - " + grid.codec_names[codec_b],
      "10 log10(lambda) [dB]", "10 log10(gamma) [dB]", "dJ [dB]");
}

std::string best_map_svg(const AppSpaceGrid& grid,
                         std::optional<std::pair<double, double>> mark_lambda_gamma) {
  const BestMap map = best_map(grid);
  std::optional<std::pair<double, double>> mark_db;
  if (mark_lambda_gamma) {
    mark_db = {db_of(mark_lambda_gamma->first), db_of(mark_lambda_gamma->second)};
  }
  return svg::categorical_heatmap(map.index, grid.lambda_db_axis, grid.gamma_db_axis,
                                  grid.codec_names,
                                  "Best codec map (" + std::string(to_string(grid.reducer)) +
                                      ", " + to_string(grid.cost_kind) + ")",
                                  "10 log10(lambda) [dB]", "10 log10(gamma) [dB]", mark_db);
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  for (char ch : name) {
    const bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                    (ch >= '0' && ch <= '9') || ch == '.' || ch == '_' || ch == '-';
    out += ok ? ch : '_';
  }
  return out;
}

}  // namespace rdc
