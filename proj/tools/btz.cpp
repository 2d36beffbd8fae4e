// btz: command-line front end for the btz library.
// Exit codes: 0 success / member, 1 non-member or verifier violation, 2 usage or domain error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "btz/complex.hpp"
#include "btz/error.hpp"
#include "btz/io.hpp"
#include "btz/oracle.hpp"
#include "btz/strata.hpp"

using namespace btz;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  int r = 3;
  std::string n;
  std::string d = "2";
  std::string k = "1";
  Coord N = 5;
  std::string kind = "W";
  int margin = 1;
  std::uint64_t seed = oracle::OracleConfig{}.seed;
  std::size_t samples = 200;
  std::string output;
  std::string format;
  bool quiet = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

Coord parse_coord(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::invalid_argument, "not an integer: '" + s + "'");
  }
}

bool is_rational_text(const std::string& s) { return s.find('/') != std::string::npos; }

std::vector<std::string> coord_texts(const RunConfig& cfg) {
  if (cfg.n.empty()) fail(Errc::invalid_argument, "--n is required");
  auto parts = split(cfg.n, ',');
  if (static_cast<int>(parts.size()) != cfg.r)
    fail(Errc::invalid_rank, "--n has " + std::to_string(parts.size()) + " coordinates but --r is " + std::to_string(cfg.r));
  return parts;
}

Vertex parse_vertex(const RunConfig& cfg) {
  std::vector<Coord> c;
  for (const auto& p : coord_texts(cfg)) c.push_back(parse_coord(p));
  return normalize(std::move(c));
}

RationalPoint parse_point(const RunConfig& cfg) {
  std::vector<Rational> c;
  for (const auto& p : coord_texts(cfg)) {
    try {
      c.emplace_back(p);
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "not a rational number: '" + p + "'");
    }
  }
  return normalize(std::move(c));
}

std::vector<int> parse_weights(const std::string& text, int r, Horizon h) {
  std::vector<int> ks;
  if (text == "all") {
    if (h.is_infinite()) fail(Errc::invalid_weight, "--k all needs a finite --d");
    for (int k = 1; k < r * h.d(); ++k) ks.push_back(k);
    return ks;
  }
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      ks.push_back(static_cast<int>(parse_coord(part)));
      continue;
    }
    const int a = static_cast<int>(parse_coord(part.substr(0, dots)));
    const int b = static_cast<int>(parse_coord(part.substr(dots + 2)));
    if (a > b) fail(Errc::invalid_weight, "empty range '" + part + "'");
    for (int k = a; k <= b; ++k) ks.push_back(k);
  }
  if (ks.empty()) fail(Errc::invalid_weight, "no weight given");
  for (int k : ks) check_weight(r, h, k);
  return ks;
}

int single_weight(const RunConfig& cfg, Horizon h) {
  const auto ks = parse_weights(cfg.k, cfg.r, h);
  if (ks.size() != 1) fail(Errc::invalid_weight, "this command takes a single --k");
  return ks.front();
}

unsigned thread_count() {
  if (const char* env = std::getenv("BTZ_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return static_cast<unsigned>(t);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

WindowSpec window_spec(const RunConfig& cfg, Horizon h, int k) {
  WindowSpec spec;
  spec.r = cfg.r;
  spec.d = h;
  spec.k = k;
  spec.kind = parse_kind(cfg.kind);
  spec.N = cfg.N;
  spec.margin = cfg.margin;
  spec.threads = thread_count();
  return spec;
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "dot" && f != "svg" && f != "text") fail(Errc::invalid_argument, "unknown --format '" + f + "'");
  return f;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    if (!cfg.quiet) std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) fail(Errc::invalid_argument, "cannot write '" + cfg.output + "'");
  out << text;
}

ojson vertex_json(const Vertex& v) { return ojson(v.coords); }

ojson report_json(const Report& rep) {
  ojson j;
  j["name"] = rep.name;
  j["checked"] = rep.checked;
  j["ok"] = rep.ok();
  ojson viol = ojson::array();
  for (const auto& v : rep.violations) {
    ojson e;
    e["simplex"] = ojson::array();
    for (const auto& x : v.simplex) e["simplex"].push_back(vertex_json(x));
    e["what"] = v.what;
    e["on_boundary"] = v.on_boundary;
    viol.push_back(e);
  }
  j["violations"] = viol;
  return j;
}

std::string report_text(const Report& rep) {
  std::ostringstream os;
  os << rep.name << ": " << (rep.ok() ? "ok" : "FAILED") << " (" << rep.checked << " checked, "
     << rep.violations.size() << " violations)\n";
  for (const auto& v : rep.violations) {
    os << "  " << v.what << ":";
    for (const auto& x : v.simplex) os << " (" << to_string(x) << ")";
    if (v.on_boundary) os << " [chamber wall]";
    os << "\n";
  }
  return os.str();
}

// ---- commands ----

int cmd_member(const RunConfig& cfg) {
  const Horizon h = parse_horizon(cfg.d);
  const int k = single_weight(cfg, h);
  const bool rational = is_rational_text(cfg.n);
  ojson out;
  bool member = false;
  out["n"] = cfg.n;
  out["d"] = h.str();
  out["k"] = k;

  if (rational) {
    const RationalPoint x = parse_point(cfg);
    if (!is_weyl(x)) fail(Errc::domain_error, "rational input must lie in the Weyl chamber: " + to_string(x));
    const int d = h.effective(k);
    const auto seq = d_sequence(x, d);
    member = h.is_infinite() ? member_W_k(x, k) : member_W_dk(x, d, k);
    out["member"] = member;
    out["v_k"] = seq[static_cast<std::size_t>(k - 1)].str();
    out["v_k+1"] = seq[static_cast<std::size_t>(k)].str();
  } else {
    const Vertex n = parse_vertex(cfg);
    const bool weyl = is_weyl(n);
    member = weyl ? member_W(n, h, k) : member_A(n, h, k);
    out["member"] = member;
    out["chamber"] = weyl ? "W" : "A";
    out["v_k"] = v_value(n, h, k);
    out["v_k+1"] = v_value(n, h, k + 1);
    if (member && weyl) out["rho"] = critical_index(n, h, k);
  }

  if (format_or(cfg, "text") == "json") {
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (member ? "member" : "non-member") << "\n";
    os << "v_k = " << (out["v_k"].is_string() ? out["v_k"].get<std::string>() : out["v_k"].dump()) << "\n";
    os << "v_k+1 = " << (out["v_k+1"].is_string() ? out["v_k+1"].get<std::string>() : out["v_k+1"].dump()) << "\n";
    if (out.contains("rho")) os << "rho = " << out["rho"].get<int>() << "\n";
    emit(cfg, os.str());
  }
  return member ? 0 : 1;
}

int cmd_diagram(const RunConfig& cfg) {
  const Horizon h = parse_horizon(cfg.d);
  const Vertex n = parse_vertex(cfg);
  std::optional<int> k;
  if (cfg.k != "none") k = single_weight(cfg, h);

  const Coord lo = *std::min_element(n.coords.begin(), n.coords.end());
  const Coord hi_n = *std::max_element(n.coords.begin(), n.coords.end());
  std::vector<Box> boxes;
  if (h.is_infinite()) {
    // enough columns to show every row and boxes k, k+1
    Coord last = hi_n + 1;
    const int need = k ? *k + 1 : 0;
    const int span = static_cast<int>(last - lo + 1);
    auto full = d_diagram(n, std::max(span, need + 1)).boxes;
    while (true) {
      int count = 0;
      for (const Box& b : full) count += b.v <= last;
      if (count >= need) break;
      ++last;
    }
    for (const Box& b : full)
      if (b.v <= last) boxes.push_back(b);
  } else {
    boxes = d_diagram(n, h.d()).boxes;
  }
  Coord hi = lo;
  for (const Box& b : boxes) hi = std::max(hi, b.v);

  std::map<std::pair<int, Coord>, int> number;
  for (std::size_t idx = 0; idx < boxes.size(); ++idx) number[{boxes[idx].i, boxes[idx].v}] = static_cast<int>(idx + 1);

  if (format_or(cfg, "text") == "json") {
    ojson out;
    out["n"] = vertex_json(n);
    out["d"] = h.str();
    out["boxes"] = ojson::array();
    for (const Box& b : boxes) out["boxes"].push_back({b.i, b.v});
    if (k) {
      out["k"] = *k;
      const bool member = is_weyl(n) ? member_W(n, h, *k) : member_A(n, h, *k);
      out["member"] = member;
      if (member && is_weyl(n)) out["rho"] = critical_index(n, h, *k);
    }
    emit(cfg, out.dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  const int w = std::max<int>(4, static_cast<int>(std::to_string(boxes.size()).size()) + 3);
  os << std::setw(w) << "i/v";
  for (Coord v = lo; v <= hi; ++v) os << std::setw(w) << v;
  os << "\n";
  for (int i = 1; i <= n.rank(); ++i) {
    os << std::setw(w) << i;
    for (Coord v = lo; v <= hi; ++v) {
      auto it = number.find({i, v});
      std::string cell;
      if (it != number.end()) {
        cell = std::to_string(it->second);
        if (k && (it->second == *k || it->second == *k + 1)) cell = "[" + cell + "]";
      }
      os << std::setw(w) << cell;
    }
    os << "\n";
  }
  if (k) {
    const bool member = is_weyl(n) ? member_W(n, h, *k) : member_A(n, h, *k);
    os << "k = " << *k << ": " << (member ? "member" : "non-member");
    if (member && is_weyl(n)) os << ", rho = " << critical_index(n, h, *k);
    os << "\n";
  }
  emit(cfg, os.str());
  return 0;
}

std::vector<Report> verify_window(const ComplexWindow& cw, const RunConfig& cfg) {
  std::vector<Report> reports;
  reports.push_back(verify_strong_equidimensionality(cw, std::max(1, cw.margin)));

  if (cw.kind == Kind::A) {
    reports.push_back(verify_boundaryless(cw, std::max(2, cw.margin)));
  } else {
    // chamber walls may legitimately carry boundary; only off-wall violations count
    Report raw = verify_boundaryless(cw, std::max(2, cw.margin), BoundaryMode::ReportOnly);
    Report rep{"boundaryless-off-walls", raw.checked, {}};
    for (auto& v : raw.violations)
      if (!v.on_boundary) rep.violations.push_back(std::move(v));
    reports.push_back(std::move(rep));
  }

  Report conn{"connectivity", 0, {}};
  if (cw.r >= 3) {
    if (cw.kind == Kind::W) {
      for (const Vertex& v : cw.vertices) {
        ++conn.checked;
        if (!validate_path(reduce_to_fundamental(v, cw.d, cw.k), cw.d, cw.k))
          conn.violations.push_back({{v}, "invalid reduction path", false});
      }
    } else {
      const auto comps = connected_components(cw);
      conn.checked = cw.vertices.size();
      if (interior_component_count(cw, comps, cw.margin) > 1)
        for (const Vertex& rep : comps.representatives)
          conn.violations.push_back({{rep}, "separate component", false});
    }
  }
  reports.push_back(std::move(conn));

  if (cw.kind == Kind::W && !cw.d.is_infinite()) reports.push_back(check_decomposition(cw.r, cw.d.d(), cw.k, cw.N));

  // interior points of sampled maximal simplices of the complex are members
  Report simp{"interior-points", 0, {}};
  oracle::Rng rng(cfg.seed);
  oracle::OracleConfig ocfg;
  ocfg.seed = cfg.seed;
  const int d = cw.d.effective(cw.k);
  for (std::size_t s = 0; s < cfg.samples && !cw.maximal_simplices.empty(); ++s) {
    const auto& chain = cw.maximal_simplices[rng.below(cw.maximal_simplices.size())];
    RationalPoint x = oracle::sample_interior_point(chain, rng, ocfg);
    if (cw.kind == Kind::A) {
      std::vector<Rational> c = x.coords;
      std::sort(c.begin(), c.end(), std::greater<>());
      x = normalize(std::move(c));
    }
    ++simp.checked;
    if (!member_W_dk(x, d, cw.k)) simp.violations.push_back({chain.vertices, "interior point " + to_string(x) + " is not a member", false});
  }
  reports.push_back(std::move(simp));
  return reports;
}

int cmd_build(const RunConfig& cfg, bool verify) {
  const Horizon h = parse_horizon(cfg.d);
  const auto ks = parse_weights(cfg.k, cfg.r, h);
  const std::string format = format_or(cfg, verify ? "text" : "json");
  if (ks.size() != 1 && format != "text") fail(Errc::invalid_argument, "structured output needs a single --k");

  bool all_ok = true;
  std::ostringstream text;
  ojson out = ojson::array();
  std::string single;
  for (int k : ks) {
    const ComplexWindow cw = build_complex(window_spec(cfg, h, k));
    std::vector<Report> reports;
    if (verify) reports = verify_window(cw, cfg);
    for (const auto& r : reports) all_ok = all_ok && r.ok();

    text << kind_name(cw.kind) << "(" << h.str() << "," << k << ") r=" << cw.r << " N=" << cw.N << ": "
         << cw.vertices.size() << " vertices, " << cw.maximal_simplices.size() << " maximal simplices, "
         << edges(cw).size() << " edges\n";
    for (const auto& r : reports) text << "  " << report_text(r);

    if (format == "json") {
      if (verify) {
        ojson entry;
        entry["k"] = k;
        entry["reports"] = ojson::array();
        for (const auto& r : reports) entry["reports"].push_back(report_json(r));
        out.push_back(entry);
      } else {
        single = io::export_json(cw, reports);
      }
    } else if (format == "dot") {
      single = io::export_dot(cw);
    } else if (format == "svg") {
      single = io::render_svg({cw});
    }
  }
  if (format == "text") emit(cfg, text.str());
  else if (format == "json" && verify) emit(cfg, out.dump(2) + "\n");
  else emit(cfg, single);
  return all_ok ? 0 : 1;
}

int cmd_symmetry(const RunConfig& cfg) {
  const Horizon h = parse_horizon(cfg.d);
  if (h.is_infinite()) fail(Errc::invalid_horizon, "symmetry needs a finite --d");
  const std::string k_text = cfg.k == "1" ? "all" : cfg.k;
  const auto ks = parse_weights(k_text, cfg.r, h);
  bool ok = true;
  std::ostringstream text;
  ojson out = ojson::array();
  for (int k : ks) {
    const Report rep = check_involution_symmetry(cfg.r, h.d(), k, cfg.N);
    ok = ok && rep.ok();
    text << "k=" << k << " <-> k=" << cfg.r * h.d() - k << ": " << report_text(rep);
    ojson e = report_json(rep);
    e["k"] = k;
    e["partner"] = cfg.r * h.d() - k;
    out.push_back(e);
  }
  emit(cfg, format_or(cfg, "text") == "json" ? out.dump(2) + "\n" : text.str());
  return ok ? 0 : 1;
}

int cmd_render(const RunConfig& cfg) {
  const Horizon h = parse_horizon(cfg.d);
  const auto ks = parse_weights(cfg.k, cfg.r, h);
  const std::string format = format_or(cfg, "svg");
  std::vector<ComplexWindow> layers;
  for (int k : ks) layers.push_back(build_complex(window_spec(cfg, h, k)));
  if (format == "svg") {
    emit(cfg, io::render_svg(layers));
  } else if (format == "dot" || format == "json") {
    if (layers.size() != 1) fail(Errc::invalid_argument, format + " output needs a single --k");
    emit(cfg, format == "dot" ? io::export_dot(layers[0]) : io::export_json(layers[0]));
  } else {
    fail(Errc::invalid_argument, "render writes svg, dot or json");
  }
  return 0;
}

int cmd_reduce(const RunConfig& cfg) {
  const Horizon h = parse_horizon(cfg.d);
  const int k = single_weight(cfg, h);
  const Vertex n = parse_vertex(cfg);
  const EdgePath path = reduce_to_fundamental(n, h, k);
  const bool valid = validate_path(path, h, k);
  if (format_or(cfg, "text") == "json") {
    ojson out;
    out["path"] = ojson::array();
    for (const Vertex& v : path.vertices) out["path"].push_back(vertex_json(v));
    out["valid"] = valid;
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const Vertex& v : path.vertices) os << "(" << to_string(v) << ")\n";
    os << (valid ? "valid" : "INVALID") << " path, " << path.vertices.size() - 1 << " steps\n";
    emit(cfg, os.str());
  }
  return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vanishing loci of coefficient forms on the Bruhat-Tits building of PGL(r)"};
  app.set_version_flag("--version", std::string(BTZ_VERSION));
  app.set_config("--config", "", "flat key=value file mirroring the flags");
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--r", cfg.r, "rank r >= 2")->capture_default_str();
  app.add_option("--n", cfg.n, "vertex or rational point, comma separated");
  app.add_option("--d", cfg.d, "horizon d >= 1 or 'inf'")->capture_default_str();
  app.add_option("--k", cfg.k, "weight k: single, list, a..b, or all")->capture_default_str();
  app.add_option("--N", cfg.N, "window bound")->capture_default_str();
  app.add_option("--kind", cfg.kind, "W or A")->capture_default_str();
  app.add_option("--margin", cfg.margin, "interior margin")->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "interior-point samples for verify")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "output file (default stdout)");
  app.add_option("--format", cfg.format, "json, dot, svg or text");
  app.add_flag("-q,--quiet", cfg.quiet, "no stdout output; exit code only");

  auto* member = app.add_subcommand("member", "membership, v_k, v_k+1 and rho");
  auto* diagram = app.add_subcommand("diagram", "print the d-diagram with box numbers (--k none to skip marks)");
  auto* build = app.add_subcommand("build", "build a window and write the complex document");
  auto* verify = app.add_subcommand("verify", "run the verification suites on a window");
  auto* symmetry = app.add_subcommand("symmetry", "check the hat pairing k <-> rd-k");
  auto* render = app.add_subcommand("render", "SVG figure (r = 3) or DOT graph");
  auto* reduce = app.add_subcommand("reduce", "edge path to a fundamental weight");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.r < 2) fail(Errc::invalid_rank, "--r must be >= 2");
    if (*member) return cmd_member(cfg);
    if (*diagram) return cmd_diagram(cfg);
    if (*build) return cmd_build(cfg, false);
    if (*verify) return cmd_build(cfg, true);
    if (*symmetry) return cmd_symmetry(cfg);
    if (*render) return cmd_render(cfg);
    if (*reduce) return cmd_reduce(cfg);
  } catch (const Error& e) {
    std::cerr << "btz: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
