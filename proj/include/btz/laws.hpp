#pragma once

#include <optional>
#include <vector>

#include "btz/sequence.hpp"

namespace btz {

// Predictors below return what the update laws claim without recomputing the
// sequence of the modified vertex; the test suites compare them with recomputation.

struct AddWeightPrediction {
  bool member;
  std::optional<Coord> v;  // v_k = v_{k+1} of n + n_i when member
};

// n' = n + n_i for a member n: member iff rho != i; v' = v if i < rho, v + 1 if i > rho.
AddWeightPrediction predict_add_weight(const Vertex& n, int i, Horizon h, int k);

struct WallDrop {
  int i;
  Vertex reduced;  // n - n_i
  Coord v_k;       // predicted v_k(n) = v_k(n - n_i) + 1
};

struct DownShiftPrediction {
  Vertex shifted;             // n' = n - y
  Coord v_k;                  // predicted v_k(n) from n'
  std::optional<bool> member; // predicted membership of n from n' (needs k < rd)
  std::vector<WallDrop> wall_drops;  // only when v_k(n) >= d
};

DownShiftPrediction predict_down_shift(const Vertex& n, Horizon h, int k);

// j = 1 or m_j < m_{j-1}; equivalently m + e_j stays in the Weyl chamber.
bool admissible(const Vertex& m, int j);

// rho = 1 or m_{rho-1} > v(B_k); equals "m is not a member at k+1".
bool k_capped(const Vertex& m, Horizon h, int k);

struct UnitStepPrediction {
  bool member;
  Coord v;                  // v_k(m + e_j), always v_k(m)
  Coord v_next;             // v_{k+1}(m + e_j)
  std::optional<int> rho;   // rho_k(m + e_j) when member
};

// m' = m + e_j for a member m and admissible j.
UnitStepPrediction predict_add_unit(const Vertex& m, int j, Horizon h, int k);

struct SecondStepPrediction {
  bool member;
  std::optional<Coord> v;  // v_k(m'') = v_k(m) + 1 when member
};

// m'' = m + e_j + e_j2 where m + e_j is not a member, j2 != j admissible for m + e_j.
SecondStepPrediction predict_add_two_units(const Vertex& m, int j, int j2, Horizon h, int k);

}  // namespace btz
