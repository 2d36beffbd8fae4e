#pragma once

#include <string>
#include <vector>

#include "btz/complex.hpp"

namespace btz::io {

inline constexpr const char* kSchema = "btz-complex/1";

std::string export_json(const ComplexWindow& cw, const std::vector<Report>& summaries = {});
ComplexWindow import_json(const std::string& text);

// 1-skeleton as an undirected DOT graph; node names v_<n1>_<n2>_...
std::string export_dot(const ComplexWindow& cw);
std::string dot_node_name(const Vertex& v);

struct SvgOptions {
  double scale = 48.0;  // pixels per unit edge length
  double margin = 24.0;
  std::vector<std::string> colors = {"#1f4e9c", "#b2182b", "#1b7837", "#762a83", "#e08214"};
  bool background = true;
};

// r = 3 only. One layer per complex; styles cycle solid, dashed, dotted.
std::string render_svg(const std::vector<ComplexWindow>& layers, const SvgOptions& opts = {});

// Planar image of (n1, n2, 0) with n_1 -> (1,0) and n_2 -> (1/2, sqrt(3)/2).
std::pair<double, double> chamber_point(const Vertex& v);

}  // namespace btz::io
