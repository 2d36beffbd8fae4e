#include "btz/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "btz/error.hpp"

namespace btz::oracle {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(Errc::invalid_argument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::split(std::uint64_t index) const {
  // splitmix64 finalizer over (first output, index)
  std::mt19937_64 copy = engine_;
  std::uint64_t z = copy() + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return Rng(z ^ (z >> 31));
}

std::vector<Coord> oracle_sequence(const Vertex& n, int d) {
  if (d < 1) fail(Errc::invalid_horizon, "horizon d must be >= 1");
  std::vector<Coord> all;
  for (Coord x : n.coords)
    for (int s = 0; s < d; ++s) all.push_back(x + s);
  std::stable_sort(all.begin(), all.end());
  return all;
}

std::vector<Rational> oracle_sequence(const RationalPoint& x, int d) {
  if (d < 1) fail(Errc::invalid_horizon, "horizon d must be >= 1");
  std::vector<Rational> all;
  for (const Rational& c : x.coords)
    for (int s = 0; s < d; ++s) all.push_back(c + s);
  std::stable_sort(all.begin(), all.end());
  return all;
}

bool oracle_member(const Vertex& n, int d, int k) {
  const auto s = oracle_sequence(n, d);
  return s.at(static_cast<std::size_t>(k - 1)) == s.at(static_cast<std::size_t>(k));
}

bool oracle_member(const RationalPoint& x, int d, int k) {
  const auto s = oracle_sequence(x, d);
  return s.at(static_cast<std::size_t>(k - 1)) == s.at(static_cast<std::size_t>(k));
}

Coord oracle_value(const Vertex& n, int k) {
  // entries beyond min + spread + k can never be among the first k
  const int d = static_cast<int>(spread(n)) + k + 1;
  return oracle_sequence(n, d).at(static_cast<std::size_t>(k - 1));
}

int oracle_critical_index(const Vertex& n, int d, int k) {
  const auto s = oracle_sequence(n, d);
  const Coord v = s.at(static_cast<std::size_t>(k));
  const auto below = std::lower_bound(s.begin(), s.end(), v) - s.begin();
  int seen = 0;
  for (int i = n.rank(); i >= 1; --i) {
    if (n.at(i) > v || v >= n.at(i) + d) continue;
    if (below + ++seen == k + 1) return i;
  }
  fail(Errc::invalid_argument, "no box k+1");
}

RationalPoint sample_interior_point(const SimplexChain& chain, Rng& rng, const OracleConfig& cfg) {
  const std::size_t len = chain.size();
  if (len == 0) fail(Errc::invalid_argument, "empty chain");
  const std::int64_t lo = static_cast<std::int64_t>(len);
  const std::int64_t q = rng.range(lo, std::max<std::int64_t>(lo, cfg.denominator_bound));
  // random composition of q into len positive parts
  std::vector<std::int64_t> cuts;
  for (std::int64_t c = 1; c < q; ++c) cuts.push_back(c);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    const std::size_t pick = i + rng.below(cuts.size() - i);
    std::swap(cuts[i], cuts[pick]);
  }
  cuts.resize(len - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(q);

  const std::size_t r = chain.min().coords.size();
  RationalPoint x{std::vector<Rational>(r, Rational(0))};
  for (std::size_t j = 0; j < len; ++j) {
    const Rational t(cuts[j + 1] - cuts[j], q);
    for (std::size_t i = 0; i < r; ++i) x.coords[i] += t * chain.vertices[j].coords[i];
  }
  return x;
}

std::optional<Vertex> exhaustive_extension_search(const SimplexChain& sigma, int d, int k, Direction dir) {
  const int r = sigma.min().rank();
  const Vertex y = y_vector(r);
  const Vertex lo = dir == Direction::Up ? sigma.max() : sigma.max() - y;
  const Vertex hi = dir == Direction::Up ? sigma.min() + y : sigma.min();
  // all x in the box [lo, hi]
  Vertex x = lo;
  while (true) {
    const bool strict = dir == Direction::Up ? (x != lo) : (x != hi);
    if (strict) {
      bool ok = dir == Direction::Up ? (is_weyl(x) && oracle_member(x, d, k)) : oracle_member(x, d, k);
      if (ok) return x;
    }
    int i = r - 2;
    while (i >= 0 && x.coords[static_cast<std::size_t>(i)] == hi.coords[static_cast<std::size_t>(i)]) {
      x.coords[static_cast<std::size_t>(i)] = lo.coords[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++x.coords[static_cast<std::size_t>(i)];
  }
  return std::nullopt;
}

Vertex random_weyl_vertex(Rng& rng, int r, Coord bound) {
  std::vector<Coord> c(static_cast<std::size_t>(r), 0);
  for (int i = 0; i + 1 < r; ++i) c[static_cast<std::size_t>(i)] = rng.range(0, bound);
  std::sort(c.begin(), c.end() - 1, std::greater<>());
  return Vertex{c};
}

Vertex random_apartment_vertex(Rng& rng, int r, Coord bound) {
  std::vector<Coord> c(static_cast<std::size_t>(r), 0);
  for (int i = 0; i + 1 < r; ++i) c[static_cast<std::size_t>(i)] = rng.range(-bound, bound);
  return Vertex{c};
}

SimplexChain random_chain(Rng& rng, const Vertex& base, std::size_t length) {
  const int r = base.rank();
  if (length < 1 || length > static_cast<std::size_t>(r)) fail(Errc::invalid_argument, "chain length out of range");
  std::vector<int> order(static_cast<std::size_t>(r - 1));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  // choose length-1 strictly increasing cut points in 1..r-1
  std::vector<int> cuts(static_cast<std::size_t>(r - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  for (std::size_t i = 0; i + 1 < length; ++i) std::swap(cuts[i], cuts[i + rng.below(cuts.size() - i)]);
  cuts.resize(length - 1);
  std::sort(cuts.begin(), cuts.end());

  SimplexChain chain{{base}};
  int done = 0;
  for (int cut : cuts) {
    Vertex next = chain.vertices.back();
    for (; done < cut; ++done) next.coords[static_cast<std::size_t>(order[static_cast<std::size_t>(done)])] += 1;
    chain.vertices.push_back(std::move(next));
  }
  return chain;
}

}  // namespace btz::oracle
