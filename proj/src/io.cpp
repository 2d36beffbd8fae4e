#include "btz/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "btz/error.hpp"

namespace btz::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string label(const ComplexWindow& cw) {
  std::string s = kind_name(cw.kind);
  s += "(" + (cw.d.is_infinite() ? std::string() : cw.d.str() + ",") + std::to_string(cw.k) + ")";
  return s;
}

[[noreturn]] void parse_fail(const std::string& what) { fail(Errc::parse_error, std::string(kSchema) + ": " + what); }

template <class T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    parse_fail(where + "." + key + ": wrong type");
  }
}

}  // namespace

std::string export_json(const ComplexWindow& cw, const std::vector<Report>& summaries) {
  ordered_json header;
  header["r"] = cw.r;
  if (cw.d.is_infinite()) header["d"] = "inf";
  else header["d"] = cw.d.d();
  header["k"] = cw.k;
  header["kind"] = kind_name(cw.kind);
  header["N"] = cw.N;
  header["margin"] = cw.margin;
  header["tool_version"] = BTZ_VERSION;

  std::ostringstream os;
  os << "{\n  \"schema\": " << json(kSchema).dump() << ",\n  \"header\": " << header.dump() << ",\n";
  os << "  \"vertices\": [";
  for (std::size_t i = 0; i < cw.vertices.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << json(cw.vertices[i].coords).dump();
  os << (cw.vertices.empty() ? "],\n" : "\n  ],\n");

  os << "  \"maximal_simplices\": [";
  for (std::size_t s = 0; s < cw.maximal_simplices.size(); ++s) {
    std::vector<std::size_t> idx;
    for (const Vertex& v : cw.maximal_simplices[s].vertices) idx.push_back(*cw.index_of(v));
    os << (s ? ",\n    " : "\n    ") << json(idx).dump();
  }
  os << (cw.maximal_simplices.empty() ? "],\n" : "\n  ],\n");

  os << "  \"verification\": [";
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    ordered_json entry;
    entry["name"] = summaries[i].name;
    entry["checked"] = summaries[i].checked;
    entry["violations"] = summaries[i].violations.size();
    entry["ok"] = summaries[i].ok();
    os << (i ? ",\n    " : "\n    ") << entry.dump();
  }
  os << (summaries.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

ComplexWindow import_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("document is not an object");
  const auto schema = field<std::string>(doc, "schema", "document");
  if (schema != kSchema) parse_fail("unsupported schema '" + schema + "'");

  ComplexWindow cw;
  const json header = doc.contains("header") ? doc.at("header") : json();
  cw.r = field<int>(header, "r", "header");
  if (cw.r < 2) parse_fail("header.r must be >= 2");
  const json& dj = header.contains("d") ? header.at("d") : json();
  try {
    cw.d = dj.is_string() ? parse_horizon(dj.get<std::string>()) : Horizon::finite(field<int>(header, "d", "header"));
  } catch (const Error& e) {
    parse_fail(std::string("header.d: ") + e.what());
  }
  cw.k = field<int>(header, "k", "header");
  try {
    cw.kind = parse_kind(field<std::string>(header, "kind", "header"));
  } catch (const Error& e) {
    parse_fail(std::string("header.kind: ") + e.what());
  }
  cw.N = field<Coord>(header, "N", "header");
  cw.margin = field<int>(header, "margin", "header");

  const json& verts = doc.contains("vertices") ? doc.at("vertices") : json();
  if (!verts.is_array()) parse_fail("'vertices' must be an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    std::vector<Coord> c;
    try {
      c = verts[i].get<std::vector<Coord>>();
    } catch (const json::exception&) {
      parse_fail(where + ": not an integer array");
    }
    if (static_cast<int>(c.size()) != cw.r) parse_fail(where + ": length differs from r");
    if (c.back() != 0) parse_fail(where + ": last coordinate must be 0");
    cw.vertices.push_back(Vertex{std::move(c)});
  }
  if (!std::is_sorted(cw.vertices.begin(), cw.vertices.end()) ||
      std::adjacent_find(cw.vertices.begin(), cw.vertices.end()) != cw.vertices.end())
    parse_fail("'vertices' must be sorted and unique");

  const json& simp = doc.contains("maximal_simplices") ? doc.at("maximal_simplices") : json();
  if (!simp.is_array()) parse_fail("'maximal_simplices' must be an array");
  for (std::size_t s = 0; s < simp.size(); ++s) {
    const std::string where = "maximal_simplices[" + std::to_string(s) + "]";
    if (!simp[s].is_array() || simp[s].empty()) parse_fail(where + ": not a non-empty index array");
    SimplexChain chain;
    for (std::size_t j = 0; j < simp[s].size(); ++j) {
      const json& e = simp[s][j];
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!e.is_number_integer()) parse_fail(at + ": index is not an integer");
      const auto idx = e.get<long long>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= cw.vertices.size())
        parse_fail(at + ": index " + std::to_string(idx) + " out of range (" + std::to_string(cw.vertices.size()) +
                   " vertices)");
      chain.vertices.push_back(cw.vertices[static_cast<std::size_t>(idx)]);
    }
    if (!is_chain(chain.vertices)) parse_fail(where + ": vertices do not form a simplex chain");
    cw.maximal_simplices.push_back(std::move(chain));
  }
  return cw;
}

std::string dot_node_name(const Vertex& v) { return "v_" + to_string(v, '_'); }

std::string export_dot(const ComplexWindow& cw) {
  auto quoted = [](const Vertex& v) {
    std::string name = dot_node_name(v);
    return name.find('-') == std::string::npos ? name : "\"" + name + "\"";
  };
  std::ostringstream os;
  os << "graph \"" << label(cw) << " r=" << cw.r << " N=" << cw.N << "\" {\n";
  const bool higher = std::any_of(cw.maximal_simplices.begin(), cw.maximal_simplices.end(),
                                  [](const SimplexChain& s) { return s.size() > 2; });
  if (higher) os << "  // warning: complex has dimension > 1; emitting its 1-skeleton only\n";
  for (const Vertex& v : cw.vertices) os << "  " << quoted(v) << ";\n";
  for (auto [a, b] : edges(cw)) os << "  " << quoted(cw.vertices[a]) << " -- " << quoted(cw.vertices[b]) << ";\n";
  os << "}\n";
  return os.str();
}

std::pair<double, double> chamber_point(const Vertex& v) {
  const double n1 = static_cast<double>(v.coords[0]);
  const double n2 = static_cast<double>(v.coords[1]);
  return {n1 - n2 / 2.0, n2 * std::sqrt(3.0) / 2.0};
}

std::string render_svg(const std::vector<ComplexWindow>& layers, const SvgOptions& opts) {
  for (const auto& cw : layers)
    if (cw.r != 3) fail(Errc::unsupported_rank, "SVG rendering supports r = 3 only, got r = " + std::to_string(cw.r));

  Coord N = 0;
  for (const auto& cw : layers) N = std::max(N, cw.N);
  const auto chamber = enumerate_window(3, N, Kind::W);

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  auto extend = [&](const Vertex& v) {
    auto [x, y] = chamber_point(v);
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  };
  for (const Vertex& v : chamber) extend(v);
  for (const auto& cw : layers)
    for (const Vertex& v : cw.vertices) extend(v);

  const double legend = 18.0 * static_cast<double>(layers.size()) + 8.0;
  const double width = (xmax - xmin) * opts.scale + 2 * opts.margin;
  const double height = (ymax - ymin) * opts.scale + 2 * opts.margin + legend;
  auto px = [&](const Vertex& v) {
    auto [x, y] = chamber_point(v);
    return std::pair<std::string, std::string>{fmt(opts.margin + (x - xmin) * opts.scale),
                                               fmt(opts.margin + (ymax - y) * opts.scale)};
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "  <title>Weyl chamber window r=3 N=" << N << "</title>\n";

  if (opts.background) {
    os << "  <g id=\"chamber\" stroke=\"#cccccc\" stroke-width=\"1\" fill=\"none\">\n";
    for (const Vertex& v : chamber) {
      for (const Vertex& u : weyl_neighbors(v)) {
        if (!(v < u) || u.coords[0] > N) continue;
        auto [x1, y1] = px(v);
        auto [x2, y2] = px(u);
        os << "    <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
      }
    }
    os << "  </g>\n";
  }

  static const char* dashes[] = {"", "9,6", "2,5"};
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto& cw = layers[l];
    const std::string color = opts.colors[l % opts.colors.size()];
    const std::string dash = dashes[l % 3];
    os << "  <g id=\"layer" << l << "\" stroke=\"" << color << "\" stroke-width=\"3\" stroke-linecap=\"round\" fill=\""
       << color << "\"" << (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") << ">\n";
    os << "    <desc>" << label(cw) << " N=" << cw.N << "</desc>\n";
    for (auto [a, b] : edges(cw)) {
      const Vertex& u = cw.vertices[a];
      const Vertex& v = cw.vertices[b];
      auto [x1, y1] = px(u);
      auto [x2, y2] = px(v);
      os << "    <line id=\"e" << l << "-" << to_string(u, '.') << "_" << to_string(v, '.') << "\" x1=\"" << x1
         << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
    }
    for (const Vertex& v : cw.vertices) {
      auto [x, y] = px(v);
      os << "    <circle id=\"v" << l << "-" << to_string(v, '.') << "\" cx=\"" << x << "\" cy=\"" << y
         << "\" r=\"3.5\" stroke=\"none\"/>\n";
    }
    os << "  </g>\n";
  }

  os << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n";
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const double y = height - legend + 14.0 + 18.0 * static_cast<double>(l);
    const std::string color = opts.colors[l % opts.colors.size()];
    const std::string dash = dashes[l % 3];
    os << "    <line x1=\"" << fmt(opts.margin) << "\" y1=\"" << fmt(y - 4) << "\" x2=\"" << fmt(opts.margin + 36)
       << "\" y2=\"" << fmt(y - 4) << "\" stroke=\"" << color << "\" stroke-width=\"3\""
       << (dash.empty() ? "" : " stroke-dasharray=\"" + dash + "\"") << "/>\n";
    os << "    <text x=\"" << fmt(opts.margin + 44) << "\" y=\"" << fmt(y) << "\">= " << label(layers[l]) << "</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace btz::io
