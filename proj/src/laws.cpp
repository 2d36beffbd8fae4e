#include "btz/laws.hpp"

#include "btz/error.hpp"

namespace btz {
namespace {

void require_member(const Vertex& n, Horizon h, int k) {
  if (!is_weyl(n)) fail(Errc::domain_error, "not a Weyl vertex: " + to_string(n));
  check_weight(n.rank(), h, k);
  if (!member_A(n, h, k))
    fail(Errc::precondition_violation, "not a member at k=" + std::to_string(k) + ": " + to_string(n));
}

void check_unit_index(const Vertex& m, int j) {
  if (j < 1 || j >= m.rank()) fail(Errc::invalid_index, "index out of range 1..r-1: " + std::to_string(j));
}

}  // namespace

AddWeightPrediction predict_add_weight(const Vertex& n, int i, Horizon h, int k) {
  require_member(n, h, k);
  if (i < 1 || i >= n.rank()) fail(Errc::invalid_index, "weight index out of range 1..r-1: " + std::to_string(i));
  const int rho = critical_index(n, h, k);
  if (i == rho) return {false, std::nullopt};
  const Coord v = v_value(n, h, k);
  return {true, i < rho ? v : v + 1};
}

DownShiftPrediction predict_down_shift(const Vertex& n, Horizon h, int k) {
  if (!is_weyl(n)) fail(Errc::domain_error, "not a Weyl vertex: " + to_string(n));
  if (k < 2) fail(Errc::invalid_weight, "down shift needs k >= 2, got " + std::to_string(k));
  const int r = n.rank();
  DownShiftPrediction out{n - y_vector(r), 0, std::nullopt, {}};
  const Vertex& np = out.shifted;

  if (h.is_infinite()) {
    out.v_k = v_value(np, h, k - 1) + 1;
    out.member = member_A_k(np, k - 1);
    return out;
  }

  const int d = h.d();
  if (k > r * d) fail(Errc::invalid_weight, "k exceeds rd");
  const Coord vk = v_value(n, h, k);
  out.v_k = (vk < d ? v_value(np, h, k - 1) : v_value(np, h, k)) + 1;
  if (k < r * d) {
    // v_k < d <= v_{k+1} rules out membership whatever n' does
    const Coord next = v_value(n, h, k + 1);
    if (next < d) out.member = member_A_dk(np, d, k - 1);
    else out.member = vk >= d && member_A_dk(np, d, k);
  }
  if (vk >= d) {
    for (int i = 1; i < r; ++i) {
      if (n.at(i) > 0 && n.at(i + 1) == 0) {
        Vertex reduced = n - fundamental_weight(r, i);
        const Coord pred = v_value(reduced, h, k) + 1;
        out.wall_drops.push_back({i, std::move(reduced), pred});
      }
    }
  }
  return out;
}

bool admissible(const Vertex& m, int j) {
  check_unit_index(m, j);
  return j == 1 || m.at(j) < m.at(j - 1);
}

bool k_capped(const Vertex& m, Horizon h, int k) {
  require_member(m, h, k);
  const int rho = critical_index(m, h, k);
  if (rho == 1) return true;
  return m.at(rho - 1) > v_value(m, h, k);
}

UnitStepPrediction predict_add_unit(const Vertex& m, int j, Horizon h, int k) {
  require_member(m, h, k);
  if (!admissible(m, j)) fail(Errc::precondition_violation, "index not admissible: " + std::to_string(j));
  const int d = h.effective(k);
  const Coord v = v_value(m, h, k);
  const int rho = critical_index(m, h, k);
  const Coord mj = m.at(j);
  if (j != rho && (mj <= v - d || mj >= v)) return {true, v, v, rho};
  if (k_capped(m, h, k)) return {false, v, v + 1, std::nullopt};
  return {true, v, v, rho - 1};
}

SecondStepPrediction predict_add_two_units(const Vertex& m, int j, int j2, Horizon h, int k) {
  require_member(m, h, k);
  if (!admissible(m, j)) fail(Errc::precondition_violation, "index not admissible: " + std::to_string(j));
  const Vertex m1 = m + unit_vector(m.rank(), j);
  if (member_A(m1, h, k)) fail(Errc::precondition_violation, "m + e_j is a member");
  if (j2 == j || !admissible(m1, j2))
    fail(Errc::precondition_violation, "second index not admissible: " + std::to_string(j2));
  const int d = h.effective(k);
  const Coord v = v_value(m, h, k);
  const int rho = critical_index(m, h, k);
  bool member;
  if (j2 < rho) member = false;
  else if (j2 < j) member = true;
  else member = v - d < m.at(j2);
  return {member, member ? std::optional<Coord>(v + 1) : std::nullopt};
}

}  // namespace btz
