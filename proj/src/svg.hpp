#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace rdc::svg {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

std::string hex(Rgb c);

// Perceptually ordered continuous map for surface values, t clamped to [0,1].
Rgb sequential_color(double t);

// Fixed 17-color cycle keyed by codec index, stable across runs.
Rgb category_color(std::size_t index);

// Self-contained vector heatmap of a value matrix. Rows follow y_axis
// (drawn bottom-up so the axis increases upward), columns follow x_axis.
// Non-finite cells (the -inf dB sentinel) are drawn with the lowest color.
std::string continuous_heatmap(const Mat<double>& values, const std::vector<double>& x_axis,
                               const std::vector<double>& y_axis, const std::string& title,
                               const std::string& x_label, const std::string& y_label,
                               const std::string& value_label);

// Categorical map with a legend; optionally marks one (x, y) point in axis
// units, drawn only when it falls inside the axis ranges.
std::string categorical_heatmap(const Mat<std::size_t>& cells, const std::vector<double>& x_axis,
                                const std::vector<double>& y_axis,
                                const std::vector<std::string>& legend, const std::string& title,
                                const std::string& x_label, const std::string& y_label,
                                std::optional<std::pair<double, double>> mark = std::nullopt);

}  // namespace rdc::svg
