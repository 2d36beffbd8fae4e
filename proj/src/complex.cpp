#include "btz/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include <boost/pending/disjoint_sets.hpp>

#include "btz/error.hpp"
#include "btz/kernels.hpp"

namespace btz {
namespace {

Vertex shift(const Vertex& m, unsigned mask, int sign) {
  Vertex out = m;
  for (std::size_t i = 0; i + 1 < out.coords.size(); ++i)
    if (mask & (1u << i)) out.coords[i] += sign;
  return out;
}

bool unit_difference(const Vertex& lo, const Vertex& hi) {
  for (std::size_t i = 0; i < lo.coords.size(); ++i) {
    const Coord diff = hi.coords[i] - lo.coords[i];
    if (diff != 0 && diff != 1) return false;
  }
  return true;
}

void enumerate_weyl(int r, Coord N, std::vector<Coord>& prefix, std::vector<Vertex>& out) {
  if (static_cast<int>(prefix.size()) == r - 1) {
    Vertex v{prefix};
    v.coords.push_back(0);
    out.push_back(std::move(v));
    return;
  }
  const Coord top = prefix.empty() ? N : prefix.back();
  for (Coord c = 0; c <= top; ++c) {
    prefix.push_back(c);
    enumerate_weyl(r, N, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::uint8_t> window_membership(const std::vector<Vertex>& window, Horizon h, int k,
                                            unsigned threads) {
  const int d = h.is_infinite() ? k : h.d();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(window.size() / 256 + 1)));
  if (threads == 1) return kernels::member_batch(window, d, k);

  std::vector<std::uint8_t> out(window.size());
  std::vector<std::thread> pool;
  const std::size_t chunk = (window.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk, end = std::min(window.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      std::vector<Vertex> part(window.begin() + static_cast<std::ptrdiff_t>(begin),
                               window.begin() + static_cast<std::ptrdiff_t>(end));
      auto flags = kernels::member_batch(part, d, k);
      std::copy(flags.begin(), flags.end(), out.begin() + static_cast<std::ptrdiff_t>(begin));
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

const char* kind_name(Kind kind) { return kind == Kind::W ? "W" : "A"; }

Kind parse_kind(const std::string& text) {
  if (text == "W" || text == "w") return Kind::W;
  if (text == "A" || text == "a") return Kind::A;
  fail(Errc::invalid_argument, "kind must be W or A, got '" + text + "'");
}

bool is_chain(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return false;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (!product_lt(vertices[i - 1], vertices[i])) return false;
  return unit_difference(vertices.front(), vertices.back());
}

std::optional<SimplexChain> make_chain(std::vector<Vertex> vertices) {
  // product order refines the sum of coordinates
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    Coord sa = 0, sb = 0;
    for (Coord c : a.coords) sa += c;
    for (Coord c : b.coords) sb += c;
    return sa != sb ? sa < sb : a < b;
  });
  if (!is_chain(vertices)) return std::nullopt;
  return SimplexChain{std::move(vertices)};
}

bool ComplexWindow::contains(const Vertex& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::optional<std::size_t> ComplexWindow::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Vertex> enumerate_window(int r, Coord N, Kind kind) {
  if (r < 2) fail(Errc::invalid_rank, "rank must be >= 2");
  if (N < 0) fail(Errc::invalid_argument, "window bound N must be >= 0");
  std::vector<Vertex> out;
  if (kind == Kind::W) {
    std::vector<Coord> prefix;
    enumerate_weyl(r, N, prefix, out);
  } else {
    std::vector<Coord> c(static_cast<std::size_t>(r - 1), -N);
    while (true) {
      Coord lo = 0, hi = 0;
      for (Coord x : c) lo = std::min(lo, x), hi = std::max(hi, x);
      if (hi - lo <= N) {
        Vertex v{c};
        v.coords.push_back(0);
        out.push_back(std::move(v));
      }
      std::size_t i = c.size();
      while (i > 0 && c[i - 1] == N) c[--i] = -N;
      if (i == 0) break;
      ++c[i - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> neighbors(const Vertex& v) {
  const unsigned full = (1u << (v.rank() - 1)) - 1;
  std::vector<Vertex> out;
  out.reserve(2 * full);
  for (unsigned mask = 1; mask <= full; ++mask) {
    out.push_back(shift(v, mask, +1));
    out.push_back(shift(v, mask, -1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> weyl_neighbors(const Vertex& v) {
  auto all = neighbors(v);
  std::erase_if(all, [](const Vertex& u) { return !is_weyl(u); });
  return all;
}

bool are_neighbors(const Vertex& a, const Vertex& b) {
  if (a == b || a.rank() != b.rank()) return false;
  return unit_difference(a, b) || unit_difference(b, a);
}

bool interior(const ComplexWindow& cw, const Vertex& v, int margin) {
  if (cw.kind == Kind::W) return v.coords.front() + margin <= cw.N;
  return spread(v) + margin <= cw.N;
}

bool interior(const ComplexWindow& cw, const SimplexChain& s, int margin) {
  return std::all_of(s.vertices.begin(), s.vertices.end(),
                     [&](const Vertex& v) { return interior(cw, v, margin); });
}

void fill_maximal_simplices(ComplexWindow& cw) {
  cw.maximal_simplices.clear();
  if (cw.vertices.empty()) return;
  const unsigned full = (1u << (cw.r - 1)) - 1;
  std::vector<unsigned> masks;

  auto is_maximal = [&](const Vertex& m) {
    const unsigned top = masks.back();
    for (unsigned t = 1; t <= full; ++t)
      if ((t & top) == 0 && cw.contains(shift(m, t, -1))) return false;
    for (unsigned u = 1; u <= full; ++u) {
      bool comparable = true, present = false;
      for (unsigned s : masks) {
        if (s == u) present = true;
        if ((s & u) != s && (s & u) != u) comparable = false;
      }
      if (comparable && !present && cw.contains(shift(m, u, +1))) return false;
    }
    return true;
  };

  std::function<void(const Vertex&)> grow = [&](const Vertex& m) {
    const unsigned top = masks.back();
    for (unsigned u = top + 1; u <= full; ++u) {
      if ((u & top) != top) continue;
      if (!cw.contains(shift(m, u, +1))) continue;
      masks.push_back(u);
      grow(m);
      masks.pop_back();
    }
    if (is_maximal(m)) {
      SimplexChain chain;
      for (unsigned s : masks) chain.vertices.push_back(shift(m, s, +1));
      cw.maximal_simplices.push_back(std::move(chain));
    }
  };

  for (const Vertex& m : cw.vertices) {
    masks.assign(1, 0u);
    grow(m);
  }
  std::sort(cw.maximal_simplices.begin(), cw.maximal_simplices.end());
}

ComplexWindow build_complex(const WindowSpec& spec) {
  if (spec.r < 2) fail(Errc::invalid_rank, "rank must be >= 2, got " + std::to_string(spec.r));
  if (spec.r > 16) fail(Errc::invalid_rank, "windows are limited to r <= 16");
  check_weight(spec.r, spec.d, spec.k);
  if (spec.N < 0) fail(Errc::invalid_argument, "window bound N must be >= 0");
  if (spec.margin < 0) fail(Errc::invalid_argument, "margin must be >= 0");

  ComplexWindow cw;
  cw.r = spec.r;
  cw.d = spec.d;
  cw.k = spec.k;
  cw.kind = spec.kind;
  cw.N = spec.N;
  cw.margin = spec.margin;

  const auto window = enumerate_window(spec.r, spec.N, Kind::W);
  const auto flags = window_membership(window, spec.d, spec.k, spec.threads);
  std::vector<Vertex> members;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (flags[i]) members.push_back(window[i]);

  if (spec.kind == Kind::W) {
    cw.vertices = std::move(members);
  } else {
    // A(d,k) = W . W(d,k): all coordinate permutations of Weyl members
    std::set<Vertex> orbit;
    for (const Vertex& n : members) {
      std::vector<Coord> c = n.coords;
      std::sort(c.begin(), c.end());
      do {
        orbit.insert(normalize(c));
      } while (std::next_permutation(c.begin(), c.end()));
    }
    cw.vertices.assign(orbit.begin(), orbit.end());
  }
  fill_maximal_simplices(cw);
  return cw;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const ComplexWindow& cw) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cw.vertices.size(); ++i)
    for (const Vertex& u : neighbors(cw.vertices[i]))
      if (auto j = cw.index_of(u); j && *j > i) out.emplace_back(i, *j);
  std::sort(out.begin(), out.end());
  return out;
}

Components connected_components(const ComplexWindow& cw) {
  const std::size_t n = cw.vertices.size();
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(), parent.data());
  for (std::size_t i = 0; i < n; ++i) ds.make_set(i);
  for (auto [a, b] : edges(cw)) ds.union_set(a, b);

  Components comps;
  comps.label.assign(n, 0);
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = ds.find_set(i);
    if (root_label[root] == n) {
      root_label[root] = comps.count++;
      comps.representatives.push_back(cw.vertices[i]);
    }
    comps.label[i] = root_label[root];
  }
  return comps;
}

std::size_t interior_component_count(const ComplexWindow& cw, const Components& comps, int margin) {
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < cw.vertices.size(); ++i)
    if (interior(cw, cw.vertices[i], margin)) seen.insert(comps.label[i]);
  return seen.size();
}

std::size_t cycle_rank(const ComplexWindow& cw) {
  const std::size_t e = edges(cw).size();
  const std::size_t c = connected_components(cw).count;
  return e + c - cw.vertices.size();
}

bool on_common_wall(const std::vector<Vertex>& simplex) {
  if (simplex.empty()) return false;
  const int r = simplex.front().rank();
  for (int i = 1; i < r; ++i) {
    if (std::all_of(simplex.begin(), simplex.end(), [&](const Vertex& v) { return v.at(i) == v.at(i + 1); }))
      return true;
  }
  return false;
}

Report verify_strong_equidimensionality(const ComplexWindow& cw, int margin) {
  if (margin < 1) fail(Errc::invalid_argument, "margin must be >= 1");
  Report report{"strong-equidimensionality", 0, {}};
  const std::size_t want = static_cast<std::size_t>(cw.r - 1);
  for (const auto& s : cw.maximal_simplices) {
    const bool touches = std::any_of(s.vertices.begin(), s.vertices.end(),
                                     [&](const Vertex& v) { return interior(cw, v, margin); });
    if (!touches) continue;
    ++report.checked;
    if (s.size() != want) {
      report.violations.push_back({s.vertices,
                                   "maximal simplex with " + std::to_string(s.size()) + " vertices, expected " +
                                       std::to_string(want),
                                   on_common_wall(s.vertices)});
    }
  }
  return report;
}

Report verify_boundaryless(const ComplexWindow& cw, int margin, BoundaryMode mode) {
  if (cw.kind == Kind::W && mode == BoundaryMode::Strict)
    fail(Errc::invalid_argument,
         "boundarylessness is a property of A-complexes; W-complexes have boundary on the chamber walls "
         "(use report-only mode)");
  if (margin < 1) fail(Errc::invalid_argument, "margin must be >= 1");
  Report report{"boundaryless", 0, {}};
  if (cw.r < 3) return report;  // no (r-3)-simplices

  const std::size_t face = static_cast<std::size_t>(cw.r - 2);
  std::set<SimplexChain> faces;
  for (const auto& s : cw.maximal_simplices) {
    if (s.size() < face) continue;
    std::vector<bool> pick(s.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(face), true);
    do {
      SimplexChain sub;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (pick[i]) sub.vertices.push_back(s.vertices[i]);
      faces.insert(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  for (const auto& sigma : faces) {
    if (!interior(cw, sigma, margin)) continue;
    ++report.checked;
    std::size_t cofaces = 0;
    for (const Vertex& x : neighbors(sigma.min())) {
      if (!cw.contains(x)) continue;
      if (std::find(sigma.vertices.begin(), sigma.vertices.end(), x) != sigma.vertices.end()) continue;
      auto verts = sigma.vertices;
      verts.push_back(x);
      if (make_chain(std::move(verts))) ++cofaces;
    }
    if (cofaces < 2) {
      report.violations.push_back({sigma.vertices,
                                   "face of " + std::to_string(cofaces) + " top-dimensional simplices",
                                   on_common_wall(sigma.vertices)});
    }
  }
  return report;
}

Vertex reflect_in_facet(const SimplexChain& tau, const Vertex& n) {
  const int r = n.rank();
  if (static_cast<int>(tau.size()) != r || !is_chain(tau.vertices) || tau.max() != tau.min() + y_vector(r))
    fail(Errc::invalid_argument, "tau is not a maximal simplex of the apartment");
  auto it = std::find(tau.vertices.begin(), tau.vertices.end(), n);
  if (it == tau.vertices.end()) fail(Errc::invalid_argument, "vertex not in tau: " + to_string(n));
  const std::size_t j = static_cast<std::size_t>(it - tau.vertices.begin());
  const auto& m = tau.vertices;
  if (j == 0) return m[1] + y_vector(r);
  if (j + 1 == m.size()) return m[m.size() - 2] - y_vector(r);
  return m[j - 1] + m[j + 1] - m[j];
}

RefinedEdge refine_edge(const Vertex& m, const Vertex& n, Horizon h, int k) {
  if (!is_weyl(m) || !is_weyl(n)) fail(Errc::invalid_argument, "edge endpoints must be Weyl vertices");
  if (!product_lt(m, n) || !unit_difference(m, n)) fail(Errc::invalid_argument, "m < n is not an edge");
  if (!member_W(m, h, k) || !member_W(n, h, k)) fail(Errc::invalid_argument, "edge endpoints must be members");

  RefinedEdge out;
  out.chain.push_back(m);
  for (int i = 1; i < m.rank(); ++i)
    if (n.at(i) > m.at(i)) out.chain.push_back(out.chain.back() + unit_vector(m.rank(), i));

  const Coord v = v_value(m, h, k);
  if (v < v_value(n, h, k)) {
    for (std::size_t t = 0; t < out.chain.size(); ++t) {
      if (v_value(out.chain[t], h, k + 1) == v + 1) {
        out.exception = t;
        break;
      }
    }
  }
  return out;
}

std::optional<Vertex> sandwich_replacement(const Vertex& a, const Vertex& n, const Vertex& b, Horizon h, int k) {
  if (!product_lt(a, b) || !unit_difference(a, b)) fail(Errc::invalid_argument, "a < b is not an edge");
  unsigned support = 0;
  for (std::size_t i = 0; i + 1 < a.coords.size(); ++i)
    if (b.coords[i] > a.coords[i]) support |= 1u << i;
  for (unsigned t = 1; t < support; ++t) {
    if ((t & support) != t) continue;
    Vertex x = shift(a, t, +1);
    if (x != n && member_A(x, h, k)) return x;
  }
  return std::nullopt;
}

Report check_involution_symmetry(int r, int d, int k, Coord N) {
  const Horizon h = Horizon::finite(d);
  check_weight(r, h, k);
  Report report{"involution", 0, {}};
  std::set<Vertex> lhs, rhs;
  for (const Vertex& n : enumerate_window(r, N, Kind::W)) {
    ++report.checked;
    if (member_W_dk(n, d, k)) lhs.insert(hat(n));
    if (member_W_dk(n, d, r * d - k)) rhs.insert(n);
  }
  for (const Vertex& v : lhs)
    if (!rhs.count(v))
      report.violations.push_back({{v}, "hat image of a W(d,k) member is not in W(d,rd-k)", false});
  for (const Vertex& v : rhs)
    if (!lhs.count(v))
      report.violations.push_back({{v}, "W(d,rd-k) member is not a hat image", false});
  return report;
}

}  // namespace btz
