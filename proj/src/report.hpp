#pragma once

#include <optional>
#include <string>
#include <vector>

#include "appspace.hpp"
#include "bd.hpp"
#include "cost.hpp"
#include "dataset.hpp"

namespace rdc {

// BD report for one codec pair: the classic RD-plane deltas and the
// conventional BD-rate always, the requested plane's axis deltas when plane
// != RD, and the requested intermediate delta when lambda is given.
std::string bd_report_json(const std::vector<CodecDataset>& codecs, const std::string& codec_a,
                           const std::string& codec_b, DistortionScale scale, Plane plane,
                           std::optional<double> lambda);

// Per-codec cost report at one (lambda, gamma). cost_kind nullopt picks
// curve_cost for curve-mode codecs and the cloud reducer otherwise. An
// AppPoint echoes the calculator output when the plane came from a model.
std::string cost_report_json(const std::vector<CodecDataset>& codecs,
                             const std::vector<std::string>& subset, double lambda, double gamma,
                             Reducer reducer, std::optional<CostKind> cost_kind,
                             const AppPoint* app_point);

std::string app_point_to_json(const AppPoint& p);

const CodecDataset& find_codec(const std::vector<CodecDataset>& codecs, const std::string& name);

// Grid artifacts. CSV layout: first row the lambda axis (dB), first column
// the gamma axis (dB), the corner cell empty. Surface and difference CSVs
// carry dB values; dB of a zero cost is written as the reserved token -inf
// (null in JSON documents).
std::string surface_csv(const AppSpaceGrid& grid, std::size_t codec);
std::string difference_csv(const AppSpaceGrid& grid, std::size_t codec_a, std::size_t codec_b);
std::string best_map_csv(const AppSpaceGrid& grid);
std::string grid_to_json(const AppSpaceGrid& grid);
std::string best_map_json(const AppSpaceGrid& grid);
std::string difference_json(const AppSpaceGrid& grid, std::size_t codec_a, std::size_t codec_b);

std::string surface_svg(const AppSpaceGrid& grid, std::size_t codec);
std::string difference_svg(const AppSpaceGrid& grid, std::size_t codec_a, std::size_t codec_b);
std::string best_map_svg(const AppSpaceGrid& grid,
                         std::optional<std::pair<double, double>> mark_lambda_gamma);

// File-name-safe codec tag: characters outside [A-Za-z0-9._-] become '_'.
std::string sanitize_name(const std::string& name);

}  // namespace rdc
