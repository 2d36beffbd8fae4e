#include <doctest.h>

#include "btz/error.hpp"
#include "btz/laws.hpp"
#include "btz/oracle.hpp"

using namespace btz;

namespace {

Vertex V(std::initializer_list<Coord> c) { return Vertex{std::vector<Coord>(c)}; }

Rational Q(long long p, long long q = 1) { return Rational(p, q); }

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no btz::Error thrown");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("normalize shifts the last coordinate to zero") {
  CHECK(normalize(std::vector<Coord>{5, 4, 2, 1}) == V({4, 3, 1, 0}));
  CHECK(normalize(std::vector<Coord>{-1, 0, 0}) == V({-1, 0, 0}));
  CHECK(normalize(std::vector<Rational>{Q(5, 2), Q(1, 2)}).coords == std::vector<Rational>{Q(2), Q(0)});
  CHECK(code_of([] { normalize(std::vector<Coord>{7}); }) == Errc::invalid_rank);
  CHECK(code_of([] { normalize(std::vector<Coord>{kCoordBound + 1, 0}); }) == Errc::domain_error);
}

TEST_CASE("horizon parsing") {
  CHECK(parse_horizon("inf").is_infinite());
  CHECK(parse_horizon("3") == Horizon::finite(3));
  CHECK(Horizon::infinite().effective(7) == 8);
  CHECK(code_of([] { Horizon::finite(0); }) == Errc::invalid_horizon);
  CHECK(code_of([] { parse_horizon("x"); }) == Errc::invalid_horizon);
}

TEST_CASE("d-sequence of (4,3,1,0)") {
  const Vertex n = V({4, 3, 1, 0});
  CHECK(d_sequence(n, 3) == std::vector<Coord>{0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});
  CHECK(d_sequence(n, 1) == std::vector<Coord>{0, 1, 3, 4});
  CHECK(d_sequence(n, 3) == oracle::oracle_sequence(n, 3));
}

TEST_CASE("d-sequence of a rational point") {
  const RationalPoint x{{Q(3, 2), Q(1, 2), Q(0)}};
  const std::vector<Rational> expect{Q(0), Q(1, 2), Q(1), Q(3, 2), Q(3, 2), Q(5, 2)};
  CHECK(d_sequence(x, 2) == expect);
  CHECK(member_W_dk(x, 2, 4));
  CHECK_FALSE(member_W_dk(x, 2, 3));
}

TEST_CASE("sequence agrees with the sorting oracle on random input") {
  oracle::Rng rng(11);
  for (int t = 0; t < 20000; ++t) {
    const int r = static_cast<int>(rng.range(2, 6));
    const int d = static_cast<int>(rng.range(1, 5));
    const Vertex n = oracle::random_apartment_vertex(rng, r, 20);
    REQUIRE(d_sequence(n, d) == oracle::oracle_sequence(n, d));
  }
  for (int t = 0; t < 2000; ++t) {
    const int r = static_cast<int>(rng.range(2, 5));
    const int d = static_cast<int>(rng.range(1, 4));
    std::vector<Rational> c;
    for (int i = 0; i < r; ++i) c.emplace_back(rng.range(-30, 30), rng.range(1, 7));
    const RationalPoint x = normalize(std::move(c));
    REQUIRE(d_sequence(x, d) == oracle::oracle_sequence(x, d));
  }
}

TEST_CASE("weight range is checked") {
  const Vertex n = V({1, 0, 0});
  CHECK(code_of([&] { member_W(n, Horizon::finite(2), 0); }) == Errc::invalid_weight);
  CHECK(code_of([&] { member_W(n, Horizon::finite(2), 6); }) == Errc::invalid_weight);
  CHECK_NOTHROW(member_W(n, Horizon::finite(2), 5));
  CHECK_NOTHROW(member_W(n, Horizon::infinite(), 100));
  CHECK(code_of([&] { member_W_dk(V({0, 1, 0}), 2, 1); }) == Errc::domain_error);
}

TEST_CASE("small weights do not see the horizon") {
  oracle::Rng rng(5);
  for (int t = 0; t < 5000; ++t) {
    const int r = static_cast<int>(rng.range(2, 5));
    const int k = static_cast<int>(rng.range(1, 6));
    const int d = static_cast<int>(rng.range(k, k + 3));
    const Vertex n = oracle::random_weyl_vertex(rng, r, 10);
    REQUIRE(member_W_dk(n, d, k) == member_W_k(n, k));
    REQUIRE(member_W_k(n, k) == (oracle::oracle_value(n, k) == oracle::oracle_value(n, k + 1)));
    if (member_W_k(n, k)) REQUIRE(critical_index(n, Horizon::finite(d), k) == critical_index(n, Horizon::infinite(), k));
  }
}

TEST_CASE("values at the infinite horizon match the oracle") {
  oracle::Rng rng(6);
  for (int t = 0; t < 5000; ++t) {
    const int r = static_cast<int>(rng.range(2, 5));
    const int k = static_cast<int>(rng.range(1, 12));
    const Vertex n = oracle::random_weyl_vertex(rng, r, 10);
    REQUIRE(v_value(n, Horizon::infinite(), k) == oracle::oracle_value(n, k));
    REQUIRE(v_value(n, Horizon::infinite(), k + 1) == oracle::oracle_value(n, k + 1));
  }
}

TEST_CASE("diagrams and critical index of (4,3,1,0)") {
  const Vertex n = V({4, 3, 1, 0});
  const DDiagram dg = d_diagram(n, 3);
  REQUIRE(dg.boxes.size() == 12);
  CHECK(dg.box(1) == Box{4, 0});
  CHECK(dg.box(12) == Box{1, 6});
  CHECK(dg.box(7) == Box{2, 3});
  CHECK(critical_index(n, Horizon::finite(3), 6) == 2);
  CHECK(critical_index(n, Horizon::finite(3), 8) == 1);
  CHECK(critical_index(n, Horizon::infinite(), 7) == 2);
  CHECK(code_of([&] { critical_index(n, Horizon::finite(3), 5); }) == Errc::undefined_critical_index);
}

TEST_CASE("critical index agrees with the counting oracle") {
  oracle::Rng rng(7);
  for (int t = 0; t < 10000; ++t) {
    const int r = static_cast<int>(rng.range(2, 5));
    const int d = static_cast<int>(rng.range(1, 4));
    const int k = static_cast<int>(rng.range(1, r * d - 1));
    const Vertex n = oracle::random_weyl_vertex(rng, r, 8);
    if (!member_W_dk(n, d, k)) continue;
    const int rho = critical_index(n, Horizon::finite(d), k);
    REQUIRE(rho == oracle::oracle_critical_index(n, d, k));
    REQUIRE(rho >= 1);
    REQUIRE(rho < r);
  }
}

TEST_CASE("fundamental weights: member iff k + j is not divisible by r") {
  for (int r = 2; r <= 6; ++r)
    for (int d = 1; d <= 4; ++d)
      for (int k = 1; k < r * d; ++k)
        for (int j = 0; j < r; ++j) CHECK(member_W_dk(fundamental_weight(r, j), d, k) == ((k + j) % r != 0));
  CHECK_FALSE(member_W_dk(V({0, 0, 0}), 2, 3));
}

TEST_CASE("hat and the box bijection") {
  CHECK(hat(V({4, 3, 1, 0})) == V({4, 3, 1, 0}));
  CHECK(hat(V({5, 1, 0})) == V({5, 4, 0}));
  CHECK(code_of([] { hat(V({0, 1, 0})); }) == Errc::domain_error);
  oracle::Rng rng(8);
  for (int t = 0; t < 2000; ++t) {
    const int r = static_cast<int>(rng.range(2, 6));
    const Vertex n = oracle::random_weyl_vertex(rng, r, 9);
    REQUIRE(hat(hat(n)) == n);
    REQUIRE(check_box_bijection(n, static_cast<int>(rng.range(1, 5))));
  }
}

TEST_CASE("Weyl group action") {
  const Vertex n = V({4, 3, 1, 0});
  CHECK(weyl_apply({1, 2, 3, 4}, n) == n);
  CHECK(weyl_apply({4, 3, 2, 1}, n) == V({-4, -3, -1, 0}));
  CHECK(weyl_sort(V({-1, 0, 0})) == V({1, 1, 0}));
  oracle::Rng rng(9);
  for (int t = 0; t < 2000; ++t) {
    const int r = static_cast<int>(rng.range(2, 5));
    const int d = static_cast<int>(rng.range(1, 4));
    const int k = static_cast<int>(rng.range(1, r * d - 1));
    const Vertex n = oracle::random_apartment_vertex(rng, r, 6);
    REQUIRE(member_A_dk(n, d, k) == member_W_dk(weyl_sort(n), d, k));
  }
}

TEST_CASE("adding a fundamental weight") {
  const Vertex n = V({4, 3, 1, 0});
  const Horizon h = Horizon::finite(3);
  // rho = 2 here, so i = 1 < rho keeps v
  const auto p1 = predict_add_weight(n, 1, h, 6);
  CHECK(p1.member);
  CHECK(*p1.v == 3);
  CHECK(member_W_dk(n + fundamental_weight(4, 1), 3, 6));
  CHECK(v_value(n + fundamental_weight(4, 1), h, 6) == 3);
  CHECK_FALSE(predict_add_weight(n, 2, h, 6).member);
  CHECK_FALSE(member_W_dk(n + fundamental_weight(4, 2), 3, 6));
  const auto p3 = predict_add_weight(n, 3, h, 6);
  CHECK(*p3.v == 4);
  CHECK(code_of([&] { predict_add_weight(n, 1, h, 5); }) == Errc::precondition_violation);
  CHECK(code_of([&] { predict_add_weight(n, 4, h, 6); }) == Errc::invalid_index);
}

TEST_CASE("down shift by y") {
  // (2,2,0) with d=1, k=2: v_2 >= d and the first equality of the wall drop holds,
  // while v_{k-1}(n - n_i) + 1 does not: n is not a member at k - 1
  const Vertex n = V({2, 2, 0});
  const auto p = predict_down_shift(n, Horizon::finite(1), 2);
  REQUIRE(p.wall_drops.size() == 1);
  CHECK(p.wall_drops[0].i == 2);
  CHECK(p.wall_drops[0].v_k == v_value(n, Horizon::finite(1), 2));
  CHECK(v_value(p.wall_drops[0].reduced, Horizon::finite(1), 1) + 1 != v_value(n, Horizon::finite(1), 2));

  // v_5 < d <= v_6: n is not a member although n - y is a member at k
  const Vertex m = V({5, 1, 0});
  CHECK_FALSE(member_W_dk(m, 3, 5));
  CHECK(member_A_dk(m - y_vector(3), 3, 5));
  CHECK(*predict_down_shift(m, Horizon::finite(3), 5).member == false);
  CHECK(code_of([&] { predict_down_shift(m, Horizon::finite(3), 1); }) == Errc::invalid_weight);
}

TEST_CASE("unit steps and capping") {
  const Horizon h = Horizon::finite(2);
  CHECK(admissible(V({1, 1, 0}), 1));
  CHECK_FALSE(admissible(V({1, 1, 0}), 2));
  CHECK(admissible(V({2, 1, 0}), 2));
  oracle::Rng rng(12);
  for (int t = 0; t < 3000; ++t) {
    const Vertex m = oracle::random_weyl_vertex(rng, 3, 6);
    const int k = static_cast<int>(rng.range(1, 5));
    if (!member_W_dk(m, 2, k)) continue;
    REQUIRE(k_capped(m, h, k) == (k == 5 || !member_W_dk(m, 2, k + 1)));
    for (int j = 1; j < 3; ++j) {
      if (!admissible(m, j)) continue;
      const Vertex mp = m + unit_vector(3, j);
      const auto p = predict_add_unit(m, j, h, k);
      REQUIRE(p.member == member_W_dk(mp, 2, k));
      REQUIRE(p.v == v_value(mp, h, k));
    }
  }
}

TEST_CASE("second unit step requires a non-member in between") {
  const Horizon h = Horizon::finite(2);
  const Vertex m = V({1, 0, 0});
  REQUIRE(member_W_dk(m, 2, 1));
  REQUIRE(member_W_dk(m + unit_vector(3, 1), 2, 1));
  CHECK(code_of([&] { predict_add_two_units(m, 1, 2, h, 1); }) == Errc::precondition_violation);
}

TEST_CASE("error names are kebab case") {
  CHECK(std::string(errc_name(Errc::invalid_weight)) == "invalid-weight");
  CHECK(std::string(errc_name(Errc::undefined_critical_index)) == "undefined-critical-index");
  const Error e(Errc::parse_error, "x");
  CHECK(std::string(e.what()) == "parse-error: x");
}
