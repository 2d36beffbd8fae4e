#pragma once

#include <vector>

#include "btz/vertex.hpp"

namespace btz {

// d-characteristic sequence: the increasingly sorted multiset {x_i + s : 1 <= i <= r, 0 <= s < d}.
std::vector<Coord> d_sequence(const Vertex& n, int d);
std::vector<Rational> d_sequence(const RationalPoint& x, int d);

// v_k^(d)(n), 1 <= k <= rd; for the infinite horizon v_k(n), k >= 1.
Coord v_value(const Vertex& n, Horizon h, int k);

// Weyl-chamber membership; the input must be a Weyl vertex/point.
bool member_W_dk(const Vertex& n, int d, int k);
bool member_W_dk(const RationalPoint& x, int d, int k);
bool member_W_k(const Vertex& n, int k);
bool member_W_k(const RationalPoint& x, int k);

// Apartment membership: same test on arbitrary normalized vertices.
bool member_A_dk(const Vertex& n, int d, int k);
bool member_A_k(const Vertex& n, int k);

bool member_W(const Vertex& n, Horizon h, int k);
bool member_A(const Vertex& n, Horizon h, int k);

// Throws invalid-weight unless 1 <= k < rd (k >= 1 for the infinite horizon).
void check_weight(int r, Horizon h, int k);

struct Box {
  int i;
  Coord v;
  friend bool operator==(const Box&, const Box&) = default;
};

// (i,v) < (i',v')  iff  v < v' or (v = v' and i > i')
bool box_less(const Box& a, const Box& b);

struct DDiagram {
  Vertex vertex;
  int d;
  std::vector<Box> boxes;  // B_1 < B_2 < ... < B_{rd}

  const Box& box(int k) const { return boxes[static_cast<std::size_t>(k - 1)]; }
};

DDiagram d_diagram(const Vertex& n, int d);
// First `length` boxes of the infinite diagram.
std::vector<Box> diagram_prefix(const Vertex& n, std::size_t length);

// rho_k^(d)(n) = i(B_{k+1}^(d)(n)); Weyl members only.
int critical_index(const Vertex& n, Horizon h, int k);

// delta(i,v) = (r+1-i, n_1+d-1-v)
Box delta(const Box& b, const Vertex& n, int d);
// delta is an order-reversing bijection diag^(d)(n) -> diag^(d)(hat n) with B_k -> B_{rd+1-k}.
bool check_box_bijection(const Vertex& n, int d);

}  // namespace btz
