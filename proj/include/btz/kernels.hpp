#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "btz/vertex.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BTZ_X86 1
#else
#define BTZ_X86 0
#endif

namespace btz::kernels {

// Batch membership test v_k^(d) = v_{k+1}^(d) over `count` vertices packed row-major
// (count x r int32 coordinates). Both variants locate v_k by bisection on the
// counting function t -> #{(i,s) : n_i + s <= t}; no sorting.
//
// Preconditions: 1 <= k < rd, |n_i| <= kPackedBound, d <= kMaxPackedHorizon, r <= kMaxPackedRank.
using MemberBatchFn = void (*)(const std::int32_t* coords, std::size_t count, int r, int d, int k,
                               std::uint8_t* out);

inline constexpr std::int32_t kPackedBound = 1 << 28;
inline constexpr int kMaxPackedHorizon = 1 << 20;
inline constexpr int kMaxPackedRank = 32;

void member_batch_scalar(const std::int32_t* coords, std::size_t count, int r, int d, int k,
                         std::uint8_t* out);

#if BTZ_X86
void member_batch_avx2(const std::int32_t* coords, std::size_t count, int r, int d, int k,
                       std::uint8_t* out);
#endif

bool avx2_available();

// Best variant for the running CPU; BTZ_KERNEL=scalar forces the reference path.
MemberBatchFn select_member_batch();
const char* selected_kernel_name();

// Packs the vertices and runs the selected kernel. Inputs outside the packed bounds
// fall back to the exact 64-bit path in sequence.hpp.
std::vector<std::uint8_t> member_batch(const std::vector<Vertex>& vertices, int d, int k);

}  // namespace btz::kernels
