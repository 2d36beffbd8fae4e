#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "btz/complex.hpp"

namespace btz::oracle {

// std::mt19937_64 output is fixed by the C++ standard; bounded draws are done here
// rather than through <random> distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  // Independent stream for trial `index`, for deterministic splitting across workers.
  Rng split(std::uint64_t index) const;

 private:
  std::mt19937_64 engine_;
};

struct OracleConfig {
  std::uint64_t seed = 20240611;
  std::size_t sample_count = 1000;
  int denominator_bound = 7;
};

// Materializes all rd values and sorts them.
std::vector<Coord> oracle_sequence(const Vertex& n, int d);
std::vector<Rational> oracle_sequence(const RationalPoint& x, int d);
bool oracle_member(const Vertex& n, int d, int k);
bool oracle_member(const RationalPoint& x, int d, int k);
// Infinite-horizon values by brute force with a horizon large enough for index k.
Coord oracle_value(const Vertex& n, int k);
// Row of the (k+1)-st d-box, counted from the sorted values: ties are broken by larger row first.
int oracle_critical_index(const Vertex& n, int d, int k);

// Strictly positive barycentric combination with common denominator <= max(bound, #vertices).
RationalPoint sample_interior_point(const SimplexChain& chain, Rng& rng, const OracleConfig& cfg);

enum class Direction { Up, Down };

// Up: a member x of W(d,k) with max < x <= min + y (same minimum).
// Down: a member x of A(d,k) with max - y <= x < min (same maximum).
std::optional<Vertex> exhaustive_extension_search(const SimplexChain& sigma, int d, int k, Direction dir);

// Random Weyl vertex with n_1 <= bound.
Vertex random_weyl_vertex(Rng& rng, int r, Coord bound);
// Random apartment vertex with coordinates in [-bound, bound].
Vertex random_apartment_vertex(Rng& rng, int r, Coord bound);
// Random chain m < m + e_{S_1} < ... with nested S_i, 1 <= length <= r.
SimplexChain random_chain(Rng& rng, const Vertex& base, std::size_t length);

}  // namespace btz::oracle
