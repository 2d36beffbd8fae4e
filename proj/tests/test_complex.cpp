#include <doctest.h>

#include <set>

#include "btz/complex.hpp"
#include "btz/error.hpp"
#include "btz/oracle.hpp"

using namespace btz;

namespace {

Vertex V(std::initializer_list<Coord> c) { return Vertex{std::vector<Coord>(c)}; }

ComplexWindow W(int d, int k, Coord N, int r = 3, Kind kind = Kind::W) {
  return build_complex({r, Horizon::finite(d), k, kind, N, 1, 1});
}

std::vector<Vertex> Vs(std::initializer_list<std::initializer_list<Coord>> list) {
  std::vector<Vertex> out;
  for (auto c : list) out.push_back(V(c));
  return out;
}

}  // namespace

TEST_CASE("window enumeration") {
  CHECK(enumerate_window(3, 1, Kind::W) == Vs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));
  CHECK(enumerate_window(3, 2, Kind::W).size() == 6);
  CHECK(enumerate_window(2, 3, Kind::W) == Vs({{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
  // spread <= 1 at r = 3: 0 and its six neighbors
  CHECK(enumerate_window(3, 1, Kind::A).size() == 7);
  const auto a = enumerate_window(4, 2, Kind::A);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("neighbors") {
  const auto n0 = neighbors(V({0, 0, 0}));
  CHECK(n0.size() == 6);
  CHECK(weyl_neighbors(V({0, 0, 0})) == Vs({{1, 0, 0}, {1, 1, 0}}));
  // brute force over {0,1}^4 shifts of (4,3,1,0)
  const Vertex n = V({4, 3, 1, 0});
  std::set<Vertex> brute;
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<Coord> up = n.coords, down = n.coords;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) up[static_cast<std::size_t>(i)] += 1, down[static_cast<std::size_t>(i)] -= 1;
    brute.insert(normalize(up));
    brute.insert(normalize(down));
  }
  const auto nb = neighbors(n);
  CHECK(std::set<Vertex>(nb.begin(), nb.end()) == brute);
  CHECK(nb.size() == 14);
  CHECK(are_neighbors(n, V({4, 4, 1, 0})));
  CHECK_FALSE(are_neighbors(n, V({6, 3, 1, 0})));
}

TEST_CASE("chains") {
  CHECK(is_chain(Vs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}})));
  CHECK_FALSE(is_chain(Vs({{0, 0, 0}, {1, 1, 0}, {2, 1, 0}})));
  auto c = make_chain(Vs({{1, 1, 0}, {0, 0, 0}, {1, 0, 0}}));
  REQUIRE(c);
  CHECK(c->min() == V({0, 0, 0}));
  CHECK(c->max() == V({1, 1, 0}));
  CHECK_FALSE(make_chain(Vs({{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("the W(2,k) windows at r = 3") {
  CHECK(W(2, 1, 4).vertices == Vs({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}}));
  CHECK(W(2, 2, 4).vertices == Vs({{0, 0, 0}, {1, 1, 0}, {2, 1, 0}, {3, 1, 0}, {4, 1, 0}}));
  CHECK(W(2, 3, 4).vertices ==
        Vs({{1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 2, 0}, {3, 0, 0}, {3, 3, 0}, {4, 0, 0}, {4, 4, 0}}));
  CHECK(W(2, 4, 4).vertices == Vs({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {3, 2, 0}, {4, 3, 0}}));
  CHECK(W(2, 5, 4).vertices == Vs({{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {3, 3, 0}, {4, 4, 0}}));
  CHECK(edges(W(2, 3, 4)).size() == 7);
  CHECK(W(2, 1, 3).vertices == Vs({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}));
}

TEST_CASE("the W(3,k) and W(4,k) windows at r = 3, N = 5") {
  struct Row {
    int d, k;
    std::size_t vertices, edges, cycles;
  };
  for (const Row& row : {Row{3, 3, 10, 9, 0}, Row{3, 4, 10, 9, 0}, Row{4, 4, 10, 9, 0}, Row{4, 5, 13, 12, 0},
                         Row{4, 6, 10, 10, 1}}) {
    const auto cw = W(row.d, row.k, 5);
    CHECK(cw.vertices.size() == row.vertices);
    CHECK(edges(cw).size() == row.edges);
    CHECK(cycle_rank(cw) == row.cycles);
    CHECK(connected_components(cw).count == 1);
  }
  CHECK(W(4, 6, 5).vertices == Vs({{1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 2, 0}, {3, 1, 0}, {3, 2, 0}, {4, 1, 0},
                                   {4, 3, 0}, {5, 1, 0}, {5, 4, 0}}));
}

TEST_CASE("full subcomplex") {
  const auto cw = W(3, 4, 5, 4);
  const std::set<Vertex> members(cw.vertices.begin(), cw.vertices.end());
  for (const auto& s : cw.maximal_simplices) {
    REQUIRE(is_chain(s.vertices));
    for (const Vertex& v : s.vertices) REQUIRE(members.count(v));
  }
  // every member edge lies in some maximal simplex
  std::set<std::pair<Vertex, Vertex>> covered;
  for (const auto& s : cw.maximal_simplices)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) covered.insert({s.vertices[i], s.vertices[j]});
  for (auto [a, b] : edges(cw)) {
    auto lo = cw.vertices[a], hi = cw.vertices[b];
    if (!product_lt(lo, hi)) std::swap(lo, hi);
    REQUIRE(covered.count({lo, hi}));
  }
}

TEST_CASE("build_complex is independent of the thread count") {
  auto spec = WindowSpec{4, Horizon::finite(3), 5, Kind::A, 4, 1, 1};
  const auto one = build_complex(spec);
  spec.threads = 4;
  CHECK(build_complex(spec) == one);
}

TEST_CASE("build_complex rejects bad parameters") {
  auto code = [](WindowSpec s) {
    try {
      build_complex(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  CHECK(code({3, Horizon::finite(2), 6, Kind::W, 4, 1, 1}) == Errc::invalid_weight);
  CHECK(code({1, Horizon::finite(2), 1, Kind::W, 4, 1, 1}) == Errc::invalid_rank);
}

TEST_CASE("components") {
  CHECK(connected_components(W(2, 2, 6, 3, Kind::A)).count == 1);
  ComplexWindow empty;
  empty.r = 3;
  CHECK(connected_components(empty).count == 0);
  // r = 2: the complexes are zero-dimensional
  const auto r2 = build_complex({2, Horizon::finite(3), 2, Kind::W, 6, 1, 1});
  CHECK(connected_components(r2).count == r2.vertices.size());
  CHECK(edges(r2).empty());
}

TEST_CASE("strong equidimensionality") {
  CHECK(verify_strong_equidimensionality(W(3, 4, 6), 1).ok());
  CHECK(verify_strong_equidimensionality(W(2, 5, 5, 4), 1).ok());

  ComplexWindow lone;
  lone.r = 4;
  lone.kind = Kind::A;
  lone.N = 6;
  lone.vertices = {V({0, 0, 0, 0})};
  fill_maximal_simplices(lone);
  const Report rep = verify_strong_equidimensionality(lone, 1);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violations.size() == 1);
}

TEST_CASE("boundarylessness") {
  CHECK(verify_boundaryless(W(2, 2, 6, 3, Kind::A), 2).ok());
  CHECK(verify_boundaryless(W(2, 3, 4, 4, Kind::A), 2).ok());
  CHECK(verify_boundaryless(W(2, 3, 4, 4, Kind::A), 2).checked > 0);

  const auto w = W(2, 2, 6);
  CHECK_THROWS_AS(verify_boundaryless(w, 2), Error);
  const Report rep = verify_boundaryless(w, 2, BoundaryMode::ReportOnly);
  REQUIRE_FALSE(rep.ok());
  for (const auto& v : rep.violations) {
    CHECK(v.on_boundary);
    CHECK(on_common_wall(v.simplex));
  }
}

TEST_CASE("reflection across a facet") {
  const SimplexChain tau{Vs({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}})};
  CHECK(reflect_in_facet(tau, V({0, 0, 0})) == V({2, 1, 0}));
  CHECK(reflect_in_facet(tau, V({1, 1, 0})) == V({0, -1, 0}));
  CHECK(reflect_in_facet(tau, V({1, 0, 0})) == V({0, 1, 0}));
  CHECK_THROWS_AS(reflect_in_facet(tau, V({2, 0, 0})), Error);

  oracle::Rng rng(41);
  for (int t = 0; t < 2000; ++t) {
    const int r = static_cast<int>(rng.range(2, 6));
    const auto chain = oracle::random_chain(rng, oracle::random_apartment_vertex(rng, r, 5), static_cast<std::size_t>(r));
    const Vertex& n = chain.vertices[rng.below(chain.size())];
    const Vertex x = reflect_in_facet(chain, n);
    std::vector<Vertex> rest;
    for (const Vertex& v : chain.vertices)
      if (v != n) rest.push_back(v);
    rest.push_back(x);
    REQUIRE(x != n);
    REQUIRE(make_chain(rest).has_value());
  }
}

TEST_CASE("edge refinement") {
  const Horizon h = Horizon::finite(3);
  // v_k equal at both ends: no exception
  oracle::Rng rng(42);
  int with = 0, without = 0;
  for (int t = 0; t < 20000; ++t) {
    const int k = static_cast<int>(rng.range(1, 11));
    const Vertex m = oracle::random_weyl_vertex(rng, 4, 6);
    if (!member_W_dk(m, 3, k)) continue;
    Vertex n = m;
    const auto mask = rng.range(1, 7);
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) n.coords[static_cast<std::size_t>(i)] += 1;
    if (!is_weyl(n) || !member_W_dk(n, 3, k)) continue;
    const auto e = refine_edge(m, n, h, k);
    const Coord v = v_value(m, h, k);
    if (v == v_value(n, h, k)) {
      ++without;
      REQUIRE_FALSE(e.exception);
    } else {
      ++with;
      REQUIRE(v_value(n, h, k) == v + 1);
      REQUIRE(e.exception);
      const Vertex& x = e.chain[*e.exception];
      REQUIRE(v_value(x, h, k) == v);
      REQUIRE(v_value(x, h, k + 1) == v + 1);
    }
    for (std::size_t i = 0; i < e.chain.size(); ++i)
      if (!e.exception || i != *e.exception) REQUIRE(member_W_dk(e.chain[i], 3, k));
  }
  CHECK(with > 0);
  CHECK(without > 0);
  CHECK_THROWS_AS(refine_edge(V({0, 0, 0, 0}), V({2, 0, 0, 0}), h, 1), Error);
}

TEST_CASE("vertex sandwich") {
  // a < n, h < b inside one cube edge a < b, n and h comparable, h a non-member
  oracle::Rng rng(43);
  int found = 0;
  for (int t = 0; t < 40000 && found < 500; ++t) {
    const int r = 4, d = static_cast<int>(rng.range(1, 3));
    const int k = static_cast<int>(rng.range(1, r * d - 1));
    const Vertex a = oracle::random_apartment_vertex(rng, r, 4);
    const auto T = static_cast<unsigned>(rng.range(1, 7));
    Vertex b = a;
    for (int i = 0; i < 3; ++i)
      if (T >> i & 1) b.coords[static_cast<std::size_t>(i)] += 1;
    if (!member_A_dk(a, d, k) || !member_A_dk(b, d, k)) continue;
    for (unsigned S = 1; S < T; ++S) {
      if ((S & T) != S) continue;
      for (unsigned H = 1; H < T; ++H) {
        if ((H & T) != H || H == S || ((H & S) != S && (H & S) != H)) continue;
        Vertex n = a, hv = a;
        for (int i = 0; i < 3; ++i) {
          if (S >> i & 1) n.coords[static_cast<std::size_t>(i)] += 1;
          if (H >> i & 1) hv.coords[static_cast<std::size_t>(i)] += 1;
        }
        if (!member_A_dk(n, d, k) || member_A_dk(hv, d, k)) continue;
        ++found;
        const auto x = sandwich_replacement(a, n, b, Horizon::finite(d), k);
        REQUIRE(x);
        REQUIRE(*x != n);
        REQUIRE(product_lt(a, *x));
        REQUIRE(product_lt(*x, b));
        REQUIRE(oracle::oracle_member(weyl_sort(*x), d, k));
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("involution symmetry") {
  for (int k = 1; k < 6; ++k) CHECK(check_involution_symmetry(3, 2, k, 6).ok());
  CHECK(check_involution_symmetry(3, 4, 5, 6).ok());
  CHECK(check_involution_symmetry(3, 4, 7, 6).ok());
  // k = rd/2 pairs with itself
  const auto mid = W(4, 6, 6);
  std::set<Vertex> hats;
  for (const Vertex& v : mid.vertices) hats.insert(hat(v));
  CHECK(hats == std::set<Vertex>(mid.vertices.begin(), mid.vertices.end()));
}
