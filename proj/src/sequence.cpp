#include "btz/sequence.hpp"

#include <algorithm>
#include <queue>

#include "btz/error.hpp"

namespace btz {
namespace {

void check_horizon(int d) {
  if (d < 1) fail(Errc::invalid_horizon, "horizon d must be >= 1, got " + std::to_string(d));
}

// k-way merge of the r runs x_i, x_i + 1, ..., x_i + d - 1.
template <class T>
std::vector<T> merge_runs(const std::vector<T>& x, int d) {
  check_horizon(d);
  struct Head {
    T value;
    std::size_t row;
    int step;
  };
  auto greater = [](const Head& a, const Head& b) { return b.value < a.value; };
  std::priority_queue<Head, std::vector<Head>, decltype(greater)> heap(greater);
  for (std::size_t i = 0; i < x.size(); ++i) heap.push({x[i], i, 0});
  std::vector<T> out;
  out.reserve(x.size() * static_cast<std::size_t>(d));
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    out.push_back(h.value);
    if (h.step + 1 < d) heap.push({h.value + 1, h.row, h.step + 1});
  }
  return out;
}

// Number of sequence entries <= t.
Coord count_le(const std::vector<Coord>& n, Coord d, Coord t) {
  Coord c = 0;
  for (Coord x : n) c += std::clamp<Coord>(t - x + 1, 0, d);
  return c;
}

// Smallest t with count_le(t) >= k: the k-th smallest entry.
Coord kth(const std::vector<Coord>& n, Coord d, Coord k) {
  auto [mn, mx] = std::minmax_element(n.begin(), n.end());
  Coord lo = *mn, hi = *mx + d - 1;
  while (lo < hi) {
    const Coord mid = lo + (hi - lo) / 2;
    if (count_le(n, d, mid) >= k) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

bool equal_at(const std::vector<Coord>& n, int d, int k) {
  const Coord v = kth(n, d, k);
  return count_le(n, d, v) >= k + 1;
}

void require_weyl(const Vertex& n) {
  if (!is_weyl(n)) fail(Errc::domain_error, "not a Weyl vertex: " + to_string(n));
}

}  // namespace

std::vector<Coord> d_sequence(const Vertex& n, int d) { return merge_runs(n.coords, d); }

std::vector<Rational> d_sequence(const RationalPoint& x, int d) { return merge_runs(x.coords, d); }

void check_weight(int r, Horizon h, int k) {
  if (h.is_infinite()) {
    if (k < 1) fail(Errc::invalid_weight, "weight k must be >= 1, got " + std::to_string(k));
    return;
  }
  const int rd = r * h.d();
  if (k < 1 || k >= rd)
    fail(Errc::invalid_weight,
         "weight k must satisfy 1 <= k < rd = " + std::to_string(rd) + ", got " + std::to_string(k));
}

Coord v_value(const Vertex& n, Horizon h, int k) {
  const int d = h.effective(k);
  if (k < 1 || k > n.rank() * d) fail(Errc::invalid_weight, "sequence index out of range: " + std::to_string(k));
  return kth(n.coords, d, k);
}

bool member_A_dk(const Vertex& n, int d, int k) {
  check_horizon(d);
  check_weight(n.rank(), Horizon::finite(d), k);
  return equal_at(n.coords, d, k);
}

bool member_A_k(const Vertex& n, int k) {
  check_weight(n.rank(), Horizon::infinite(), k);
  return equal_at(n.coords, k, k);
}

bool member_W_dk(const Vertex& n, int d, int k) {
  require_weyl(n);
  return member_A_dk(n, d, k);
}

bool member_W_k(const Vertex& n, int k) {
  require_weyl(n);
  return member_A_k(n, k);
}

bool member_W_dk(const RationalPoint& x, int d, int k) {
  if (!is_weyl(x)) fail(Errc::domain_error, "not a Weyl point: " + to_string(x));
  check_horizon(d);
  check_weight(x.rank(), Horizon::finite(d), k);
  const auto s = d_sequence(x, d);
  return s[static_cast<std::size_t>(k - 1)] == s[static_cast<std::size_t>(k)];
}

bool member_W_k(const RationalPoint& x, int k) {
  check_weight(x.rank(), Horizon::infinite(), k);
  return member_W_dk(x, k, k);
}

bool member_W(const Vertex& n, Horizon h, int k) {
  return h.is_infinite() ? member_W_k(n, k) : member_W_dk(n, h.d(), k);
}

bool member_A(const Vertex& n, Horizon h, int k) {
  return h.is_infinite() ? member_A_k(n, k) : member_A_dk(n, h.d(), k);
}

bool box_less(const Box& a, const Box& b) { return a.v < b.v || (a.v == b.v && a.i > b.i); }

DDiagram d_diagram(const Vertex& n, int d) {
  check_horizon(d);
  DDiagram out{n, d, {}};
  out.boxes.reserve(n.coords.size() * static_cast<std::size_t>(d));
  for (int i = 1; i <= n.rank(); ++i)
    for (int s = 0; s < d; ++s) out.boxes.push_back({i, n.at(i) + s});
  std::sort(out.boxes.begin(), out.boxes.end(), box_less);
  return out;
}

std::vector<Box> diagram_prefix(const Vertex& n, std::size_t length) {
  if (length == 0) return {};
  // With horizon d the first d boxes already agree with the infinite diagram.
  auto boxes = d_diagram(n, static_cast<int>(length)).boxes;
  boxes.resize(length);
  return boxes;
}

int critical_index(const Vertex& n, Horizon h, int k) {
  require_weyl(n);
  check_weight(n.rank(), h, k);
  if (!member_A(n, h, k))
    fail(Errc::undefined_critical_index, "not a member at k=" + std::to_string(k) + ": " + to_string(n));
  const int d = h.effective(k);
  return d_diagram(n, d).box(k + 1).i;
}

Box delta(const Box& b, const Vertex& n, int d) { return {n.rank() + 1 - b.i, n.at(1) + d - 1 - b.v}; }

bool check_box_bijection(const Vertex& n, int d) {
  const auto a = d_diagram(n, d);
  const auto b = d_diagram(hat(n), d);
  const std::size_t rd = a.boxes.size();
  for (std::size_t j = 0; j < rd; ++j)
    if (!(delta(a.boxes[j], n, d) == b.boxes[rd - 1 - j])) return false;
  return true;
}

}  // namespace btz
