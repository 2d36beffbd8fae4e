#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btz/sequence.hpp"

namespace btz {

enum class Kind { W, A };

const char* kind_name(Kind kind);
Kind parse_kind(const std::string& text);

// Totally ordered set of vertices with max - min <= y componentwise.
struct SimplexChain {
  std::vector<Vertex> vertices;  // strictly increasing

  const Vertex& min() const { return vertices.front(); }
  const Vertex& max() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }

  friend auto operator<=>(const SimplexChain&, const SimplexChain&) = default;
  friend bool operator==(const SimplexChain&, const SimplexChain&) = default;
};

// Strictly increasing in product order with every difference in {0,1}^(r-1).
bool is_chain(const std::vector<Vertex>& vertices);
// Sorts the vertices into chain order if they form a simplex of A.
std::optional<SimplexChain> make_chain(std::vector<Vertex> vertices);

struct WindowSpec {
  int r = 3;
  Horizon d = Horizon::finite(2);
  int k = 1;
  Kind kind = Kind::W;
  Coord N = 5;
  int margin = 1;
  unsigned threads = 1;
};

struct ComplexWindow {
  int r = 0;
  Horizon d = Horizon::infinite();
  int k = 0;
  Kind kind = Kind::W;
  Coord N = 0;
  int margin = 1;
  std::vector<Vertex> vertices;                  // members, lexicographically sorted
  std::vector<SimplexChain> maximal_simplices;   // lexicographically sorted

  bool contains(const Vertex& v) const;
  std::optional<std::size_t> index_of(const Vertex& v) const;

  friend bool operator==(const ComplexWindow&, const ComplexWindow&) = default;
};

// kind W: 0 <= n_{r-1} <= ... <= n_1 <= N; kind A: spread <= N. Lexicographic order.
std::vector<Vertex> enumerate_window(int r, Coord N, Kind kind);

// All 2^r - 2 apartment neighbors, lexicographic order.
std::vector<Vertex> neighbors(const Vertex& v);
std::vector<Vertex> weyl_neighbors(const Vertex& v);
bool are_neighbors(const Vertex& a, const Vertex& b);

// Vertex lies at least `margin` steps away from the artificial window edge.
bool interior(const ComplexWindow& cw, const Vertex& v, int margin);
bool interior(const ComplexWindow& cw, const SimplexChain& s, int margin);

ComplexWindow build_complex(const WindowSpec& spec);
// Full subcomplex on a given vertex set: computes the maximal chains.
void fill_maximal_simplices(ComplexWindow& cw);

// Edges of the 1-skeleton as index pairs (i < j), sorted.
std::vector<std::pair<std::size_t, std::size_t>> edges(const ComplexWindow& cw);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;          // per vertex, labels 0..count-1 by first occurrence
  std::vector<Vertex> representatives;     // smallest vertex per component
};

Components connected_components(const ComplexWindow& cw);
// Number of components meeting the interior of the window.
std::size_t interior_component_count(const ComplexWindow& cw, const Components& comps, int margin);
// First Betti number of the 1-skeleton: E - V + C.
std::size_t cycle_rank(const ComplexWindow& cw);

struct Violation {
  std::vector<Vertex> simplex;
  std::string what;
  bool on_boundary = false;  // lies in a wall of the Weyl chamber
};

struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

Report verify_strong_equidimensionality(const ComplexWindow& cw, int margin);

enum class BoundaryMode { Strict, ReportOnly };
// Strict mode refuses kind W: boundarylessness fails there on the chamber walls.
Report verify_boundaryless(const ComplexWindow& cw, int margin, BoundaryMode mode = BoundaryMode::Strict);

// Some i in 1..r-1 with n_i = n_{i+1} for every vertex.
bool on_common_wall(const std::vector<Vertex>& simplex);

// Reflection of a maximal simplex of A across the facet opposite n.
Vertex reflect_in_facet(const SimplexChain& tau, const Vertex& n);

struct RefinedEdge {
  std::vector<Vertex> chain;            // m = m^(0) < ... < m^(s) = n
  std::optional<std::size_t> exception; // index t of the unique non-member
};

// Unit-step refinement of an edge m < n of W members.
RefinedEdge refine_edge(const Vertex& m, const Vertex& n, Horizon h, int k);

// For a < n < b with h a non-member between, finds n' != n in A(d,k) with a < n' < b.
std::optional<Vertex> sandwich_replacement(const Vertex& a, const Vertex& n, const Vertex& b, Horizon h, int k);

Report check_involution_symmetry(int r, int d, int k, Coord N);

}  // namespace btz
