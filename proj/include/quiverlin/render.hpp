#pragma once

// Text and SVG drawings of triangle-indexed data in the staggered layout:
// c_11 ... c_nn on the top row, c_12 ... c_{n-1,n} between them below, down
// to c_1n at the bottom.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlin/ar_slices.hpp"
#include "quiverlin/cones.hpp"
#include "quiverlin/crystal_pbw.hpp"

namespace quiverlin {

enum class RenderFormat { Text, Svg };

std::optional<RenderFormat> parse_format(std::string_view name);

/// Cells are given in triangle order.
std::string render_grid(int n, const std::vector<std::string>& cells, RenderFormat format,
                        const std::string& title = "");

std::string render_triangle(const Triangle& t, RenderFormat format);

/// Each position labeled with its slice number.
std::string render_slices(const SlicePartition& p, RenderFormat format);

/// Slice numbers of T_z(X) for one component, "o" elsewhere.
std::string render_component(const SlicePartition& p, const Component& x, std::size_t index,
                             RenderFormat format);

/// All component panels, left to right.
std::string render_components(const SlicePartition& p, RenderFormat format);

std::string render_cone(const ConeSpec& cone, RenderFormat format, const std::string& title = "");

}  // namespace quiverlin
