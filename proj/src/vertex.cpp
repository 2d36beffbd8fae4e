#include "btz/vertex.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "btz/error.hpp"

namespace btz {

Horizon Horizon::finite(int d) {
  if (d < 1) fail(Errc::invalid_horizon, "horizon d must be >= 1, got " + std::to_string(d));
  return Horizon(d);
}

int Horizon::d() const {
  if (is_infinite()) fail(Errc::invalid_horizon, "infinite horizon has no finite d");
  return d_;
}

std::string Horizon::str() const { return is_infinite() ? "inf" : std::to_string(d_); }

Horizon parse_horizon(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return Horizon::infinite();
  int d = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(Errc::invalid_horizon, "cannot parse horizon '" + text + "'");
  return Horizon::finite(d);
}

Vertex normalize(std::vector<Coord> coords) {
  if (coords.size() < 2) fail(Errc::invalid_rank, "rank must be >= 2, got " + std::to_string(coords.size()));
  const Coord last = coords.back();
  for (auto& c : coords) {
    c -= last;
    if (c > kCoordBound || c < -kCoordBound)
      fail(Errc::domain_error, "coordinate exceeds the bound 2^30 after normalization");
  }
  return Vertex{std::move(coords)};
}

RationalPoint normalize(std::vector<Rational> coords) {
  if (coords.size() < 2) fail(Errc::invalid_rank, "rank must be >= 2, got " + std::to_string(coords.size()));
  const Rational last = coords.back();
  for (auto& c : coords) c -= last;
  return RationalPoint{std::move(coords)};
}

RationalPoint to_point(const Vertex& v) {
  RationalPoint x;
  x.coords.reserve(v.coords.size());
  for (Coord c : v.coords) x.coords.emplace_back(c);
  return x;
}

bool is_weyl(const Vertex& v) {
  if (v.coords.empty() || v.coords.back() != 0) return false;
  return std::is_sorted(v.coords.rbegin(), v.coords.rend());
}

bool is_weyl(const RationalPoint& x) {
  if (x.coords.empty() || x.coords.back() != 0) return false;
  return std::is_sorted(x.coords.rbegin(), x.coords.rend());
}

Vertex fundamental_weight(int r, int j) {
  if (r < 2) fail(Errc::invalid_rank, "rank must be >= 2");
  if (j < 0 || j >= r) fail(Errc::invalid_index, "fundamental weight index out of range: " + std::to_string(j));
  Vertex v{std::vector<Coord>(static_cast<std::size_t>(r), 0)};
  std::fill(v.coords.begin(), v.coords.begin() + j, 1);
  return v;
}

Vertex unit_vector(int r, int j) {
  if (r < 2) fail(Errc::invalid_rank, "rank must be >= 2");
  if (j < 1 || j >= r) fail(Errc::invalid_index, "unit vector index out of range: " + std::to_string(j));
  Vertex v{std::vector<Coord>(static_cast<std::size_t>(r), 0)};
  v.coords[static_cast<std::size_t>(j - 1)] = 1;
  return v;
}

Vertex y_vector(int r) { return fundamental_weight(r, r - 1); }

Vertex zero_vertex(int r) { return fundamental_weight(r, 0); }

Vertex operator+(const Vertex& a, const Vertex& b) {
  Vertex out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Vertex operator-(const Vertex& a, const Vertex& b) {
  Vertex out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

Vertex operator*(Coord t, const Vertex& a) {
  Vertex out = a;
  for (auto& c : out.coords) c *= t;
  return out;
}

bool product_le(const Vertex& a, const Vertex& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] > b.coords[i]) return false;
  return true;
}

bool product_lt(const Vertex& a, const Vertex& b) { return a != b && product_le(a, b); }

Coord spread(const Vertex& v) {
  auto [lo, hi] = std::minmax_element(v.coords.begin(), v.coords.end());
  return *hi - *lo;
}

Vertex weyl_apply(const std::vector<int>& w, const Vertex& n) {
  const std::size_t r = n.coords.size();
  if (w.size() != r) fail(Errc::invalid_argument, "permutation length differs from rank");
  std::vector<Coord> out(r);
  std::vector<bool> seen(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    const int target = w[i];
    if (target < 1 || target > static_cast<int>(r) || seen[static_cast<std::size_t>(target - 1)])
      fail(Errc::invalid_argument, "not a permutation of 1..r");
    seen[static_cast<std::size_t>(target - 1)] = true;
    out[static_cast<std::size_t>(target - 1)] = n.coords[i];
  }
  return normalize(std::move(out));
}

Vertex weyl_sort(const Vertex& n) {
  std::vector<Coord> c = n.coords;
  std::sort(c.begin(), c.end(), std::greater<>());
  return normalize(std::move(c));
}

Vertex hat(const Vertex& n) {
  if (!is_weyl(n)) fail(Errc::domain_error, "hat is defined on Weyl vertices only: " + to_string(n));
  const std::size_t r = n.coords.size();
  Vertex out{std::vector<Coord>(r)};
  for (std::size_t i = 0; i < r; ++i) out.coords[i] = n.coords[0] - n.coords[r - 1 - i];
  return out;
}

RationalPoint hat(const RationalPoint& x) {
  if (!is_weyl(x)) fail(Errc::domain_error, "hat is defined on Weyl points only: " + to_string(x));
  const std::size_t r = x.coords.size();
  RationalPoint out{std::vector<Rational>(r)};
  for (std::size_t i = 0; i < r; ++i) out.coords[i] = x.coords[0] - x.coords[r - 1 - i];
  return out;
}

std::string to_string(const Vertex& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v.coords[i]);
  }
  return s;
}

std::string to_string(const RationalPoint& x, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) os << sep;
    os << x.coords[i];
  }
  return os.str();
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Coord c : v.coords) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace btz
