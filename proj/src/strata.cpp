#include "btz/strata.hpp"

#include <set>
#include <stdexcept>

#include "btz/error.hpp"

namespace btz {
namespace {

// t such that n = t * n_j for some j, if any.
std::optional<std::pair<Coord, int>> as_weight_multiple(const Vertex& n) {
  const int r = n.rank();
  const Coord t = n.at(1);
  int j = 0;
  while (j < r && n.at(j + 1) == t) ++j;
  for (int i = j + 1; i <= r; ++i)
    if (n.at(i) != 0) return std::nullopt;
  if (t == 0) return std::pair<Coord, int>{0, 0};
  return std::pair<Coord, int>{t, j};
}

bool is_fundamental(const Vertex& n) {
  auto w = as_weight_multiple(n);
  return w && w->first <= 1;
}

}  // namespace

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::S1: return "S1";
    case Stratum::S2: return "S2";
    case Stratum::S3: return "S3";
    case Stratum::S4: return "S4";
  }
  return "?";
}

bool in_s3(const Vertex& n, int d, int k) {
  if (k < 2) return false;
  return member_W_dk(n, d, k - 1) && member_W_dk(n, d, k) && v_value(n, Horizon::finite(d), k) == d - 1;
}

bool in_s4(const Vertex& n, int d, int k) {
  return member_W_dk(n, d, k) && n.at(n.rank() - 1) == 0 && v_value(n, Horizon::finite(d), k) >= d;
}

Stratum classify_stratum(const Vertex& n, int d, int k) {
  if (!is_weyl(n)) fail(Errc::domain_error, "not a Weyl vertex: " + to_string(n));
  if (!member_W_dk(n, d, k))
    fail(Errc::precondition_violation, "not a member at k=" + std::to_string(k) + ": " + to_string(n));
  if (in_s3(n, d, k)) return Stratum::S3;
  if (in_s4(n, d, k)) return Stratum::S4;
  return v_value(n, Horizon::finite(d), k) < d ? Stratum::S1 : Stratum::S2;
}

Report check_decomposition(int r, int d, int k, Coord N) {
  const Horizon h = Horizon::finite(d);
  check_weight(r, h, k);
  Report report{"stratification", 0, {}};
  auto flag = [&](const Vertex& n, const std::string& what) { report.violations.push_back({{n}, what, false}); };

  const Vertex y = y_vector(r);
  const auto window = enumerate_window(r, N, Kind::W);
  std::set<Vertex> base;  // S3 u S4
  for (const Vertex& n : window) {
    if (!member_W_dk(n, d, k)) continue;
    const bool s3 = in_s3(n, d, k), s4 = in_s4(n, d, k);
    if (s3 && s4) flag(n, "S3 and S4 intersect");
    if (!s3 && !s4) continue;
    base.insert(n);

    const Coord v = v_value(n, h, k);
    const int rho = critical_index(n, h, k);
    if (s3) {
      const int rho_prev = critical_index(n, h, k - 1);
      if (rho + 1 != rho_prev || rho_prev >= r) flag(n, "S3 element violates rho_k + 1 = rho_{k-1} < r");
    }
    const Coord reach = N - n.at(1) + 2;
    for (Coord j = 1; j <= reach; ++j) {
      const Vertex m = n + j * y;
      if (!member_W_dk(m, d, k)) {
        flag(m, "ray from S3/S4 leaves W(d,k)");
        break;
      }
      if (v_value(m, h, k) != v + j || critical_index(m, h, k) != rho) {
        flag(m, "ray from S3/S4 changes v_k or rho unexpectedly");
        break;
      }
    }
  }

  for (const Vertex& n : window) {
    ++report.checked;
    bool s5 = false;
    for (Coord j = 0; j <= n.at(r - 1) && !s5; ++j) s5 = base.count(n - j * y) > 0;
    const bool member = member_W_dk(n, d, k);
    if (s5 && !member) {
      flag(n, "S5 element is not a member");
      continue;
    }
    if (!member) continue;
    const bool s1 = v_value(n, h, k) < d;
    if (!s1 && k <= d) flag(n, "S2 is nonempty although k <= d");
    if (!s1 && !s5) flag(n, "member outside S1 u S5");
    if ((s1 && s5) != in_s3(n, d, k)) flag(n, "S1 n S5 differs from S3");
  }
  return report;
}

EdgePath reduce_to_fundamental(const Vertex& start, Horizon h, int k) {
  if (!is_weyl(start)) fail(Errc::domain_error, "not a Weyl vertex: " + to_string(start));
  // at r = 2 the complexes are discrete
  if (start.rank() < 3) fail(Errc::unsupported_rank, "edge paths need r >= 3");
  check_weight(start.rank(), h, k);
  if (!member_W(start, h, k))
    fail(Errc::precondition_violation, "not a member at k=" + std::to_string(k) + ": " + to_string(start));

  // W(k) = W(d,k) for d >= k
  const int d = h.is_infinite() ? k : h.d();
  const Horizon hd = Horizon::finite(d);
  const int r = start.rank();
  EdgePath path{{start}};
  Vertex cur = start;
  const Coord guard = 4 * (start.at(1) + 2) * r;

  for (Coord step = 0; !is_fundamental(cur); ++step) {
    if (step > guard) throw std::logic_error("reduction does not terminate at " + to_string(cur));
    std::optional<Vertex> next;
    if (v_value(cur, hd, k) >= d) {
      int i = r - 1;
      while (cur.at(i) == 0) --i;
      next = cur - fundamental_weight(r, i);
    } else {
      for (int i = 1; i < r && !next; ++i) {
        if (cur.at(i) <= cur.at(i + 1)) continue;
        Vertex cand = cur - fundamental_weight(r, i);
        if (member_W_dk(cand, d, k)) next = std::move(cand);
      }
      if (!next) {
        auto w = as_weight_multiple(cur);
        if (!w) throw std::logic_error("reduction stuck at " + to_string(cur));
        const int j = w->second;
        const int rho = critical_index(cur, hd, k);
        next = rho <= r - rho ? cur - unit_vector(r, j) : cur + unit_vector(r, j + 1);
      }
    }
    if (!is_weyl(*next) || !member_W_dk(*next, d, k))
      throw std::logic_error("reduction step left W(d,k) at " + to_string(*next));
    cur = *next;
    path.vertices.push_back(cur);
  }
  return path;
}

bool validate_path(const EdgePath& path, Horizon h, int k) {
  if (path.vertices.empty()) return false;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const Vertex& v = path.vertices[i];
    if (!is_weyl(v) || !member_W(v, h, k)) return false;
    if (i > 0 && !are_neighbors(path.vertices[i - 1], v)) return false;
  }
  return is_fundamental(path.vertices.back());
}

}  // namespace btz
