#include "btz/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#include "btz/error.hpp"
#include "btz/sequence.hpp"

namespace btz::kernels {
namespace {

std::int64_t count_le(const std::int32_t* row, int r, std::int64_t d, std::int64_t t) {
  std::int64_t c = 0;
  for (int i = 0; i < r; ++i) c += std::clamp<std::int64_t>(t - row[i] + 1, 0, d);
  return c;
}

bool force_scalar() {
  const char* env = std::getenv("BTZ_KERNEL");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}

}  // namespace

void member_batch_scalar(const std::int32_t* coords, std::size_t count, int r, int d, int k,
                         std::uint8_t* out) {
  for (std::size_t n = 0; n < count; ++n) {
    const std::int32_t* row = coords + n * static_cast<std::size_t>(r);
    auto [mn, mx] = std::minmax_element(row, row + r);
    std::int64_t lo = *mn, hi = static_cast<std::int64_t>(*mx) + d - 1;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (count_le(row, r, d, mid) >= k) hi = mid;
      else lo = mid + 1;
    }
    out[n] = count_le(row, r, d, lo) >= k + 1 ? 1 : 0;
  }
}

bool avx2_available() {
#if BTZ_X86
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

MemberBatchFn select_member_batch() {
#if BTZ_X86
  if (!force_scalar() && avx2_available()) return &member_batch_avx2;
#endif
  return &member_batch_scalar;
}

const char* selected_kernel_name() {
#if BTZ_X86
  if (select_member_batch() == &member_batch_avx2) return "avx2";
#endif
  return "scalar";
}

std::vector<std::uint8_t> member_batch(const std::vector<Vertex>& vertices, int d, int k) {
  std::vector<std::uint8_t> out(vertices.size(), 0);
  if (vertices.empty()) return out;
  const int r = vertices.front().rank();
  check_weight(r, Horizon::finite(d), k);

  bool packable = r <= kMaxPackedRank && d <= kMaxPackedHorizon;
  for (const auto& v : vertices) {
    if (!packable) break;
    if (v.rank() != r) fail(Errc::invalid_rank, "mixed ranks in batch");
    for (Coord c : v.coords)
      if (c > kPackedBound || c < -kPackedBound) packable = false;
  }
  if (!packable) {
    for (std::size_t n = 0; n < vertices.size(); ++n) out[n] = member_A_dk(vertices[n], d, k) ? 1 : 0;
    return out;
  }

  std::vector<std::int32_t> packed(vertices.size() * static_cast<std::size_t>(r));
  for (std::size_t n = 0; n < vertices.size(); ++n)
    for (int i = 0; i < r; ++i)
      packed[n * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] =
          static_cast<std::int32_t>(vertices[n].coords[static_cast<std::size_t>(i)]);
  select_member_batch()(packed.data(), vertices.size(), r, d, k, out.data());
  return out;
}

}  // namespace btz::kernels
