#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace btz {

using Coord = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

// Documented coordinate bound for vertices: |n_i| <= 2^30 after normalization.
inline constexpr Coord kCoordBound = Coord{1} << 30;

// Vertex of the standard apartment, normalized so that the last coordinate is 0.
// Indices in the public API are 1-based like the notation n_1..n_r; coords is 0-based.
struct Vertex {
  std::vector<Coord> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  Coord operator[](std::size_t i) const { return coords[i]; }
  // n_i for 1 <= i <= r
  Coord at(int i) const { return coords[static_cast<std::size_t>(i - 1)]; }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct RationalPoint {
  std::vector<Rational> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Horizon d of the d-characteristic sequence, or the infinite horizon.
class Horizon {
 public:
  static Horizon finite(int d);
  static Horizon infinite() { return Horizon(0); }

  bool is_infinite() const { return d_ == 0; }
  int d() const;
  // Finite horizon that reproduces v_1..v_{k+1} of the infinite sequence.
  int effective(int k) const { return is_infinite() ? k + 1 : d_; }
  std::string str() const;

  friend bool operator==(const Horizon&, const Horizon&) = default;

 private:
  explicit Horizon(int d) : d_(d) {}
  int d_;
};

Horizon parse_horizon(const std::string& text);

Vertex normalize(std::vector<Coord> coords);
RationalPoint normalize(std::vector<Rational> coords);
RationalPoint to_point(const Vertex& v);

bool is_weyl(const Vertex& v);
bool is_weyl(const RationalPoint& x);

// n_j = (1,...,1,0,...,0) with j ones, 0 <= j < r.
Vertex fundamental_weight(int r, int j);
// e_j, 1 <= j < r.
Vertex unit_vector(int r, int j);
// y = n_{r-1}
Vertex y_vector(int r);
Vertex zero_vertex(int r);

Vertex operator+(const Vertex& a, const Vertex& b);
Vertex operator-(const Vertex& a, const Vertex& b);
Vertex operator*(Coord t, const Vertex& a);

// Componentwise order on normalized coordinates.
bool product_le(const Vertex& a, const Vertex& b);
bool product_lt(const Vertex& a, const Vertex& b);
// max_i n_i - min_i n_i, last coordinate included.
Coord spread(const Vertex& v);

// Permutes coordinates (result[w(i)] = x[i], w given 1-based) and renormalizes.
Vertex weyl_apply(const std::vector<int>& w, const Vertex& n);
// Sorts coordinates decreasingly and renormalizes: the Weyl representative of the orbit.
Vertex weyl_sort(const Vertex& n);

// (x_1 - x_r, x_1 - x_{r-1}, ..., x_1 - x_1); Weyl input only.
Vertex hat(const Vertex& n);
RationalPoint hat(const RationalPoint& x);

std::string to_string(const Vertex& v, char sep = ',');
std::string to_string(const RationalPoint& x, char sep = ',');

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

}  // namespace btz
