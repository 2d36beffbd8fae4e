#pragma once

#include <vector>

#include "btz/complex.hpp"

namespace btz {

// S1: v_k < d.  S2: v_k >= d.  S3: member at k-1 and k with v_k = d-1.  S4: n_{r-1} = 0 and v_k >= d.
// S3 is a subset of S1 and S4 of S2; classify_stratum returns the most specific tag.
enum class Stratum { S1, S2, S3, S4 };

const char* stratum_name(Stratum s);

Stratum classify_stratum(const Vertex& n, int d, int k);
bool in_s3(const Vertex& n, int d, int k);
bool in_s4(const Vertex& n, int d, int k);

// W(d,k) = S1 u S5 with S5 = (S3 u S4) + N0*y and S1 n S5 = S3, S3 n S4 empty, checked on the window.
// Also checks the ray property of S3/S4 and rho_k + 1 = rho_{k-1} < r on S3.
Report check_decomposition(int r, int d, int k, Coord N);

struct EdgePath {
  std::vector<Vertex> vertices;
};

// Edge path inside W(d,k) ending in a fundamental weight n_j.
// r >= 3; unsupported-rank otherwise.
EdgePath reduce_to_fundamental(const Vertex& n, Horizon h, int k);

// Consecutive entries are neighbors, every entry is a Weyl member, the last one is some n_j.
bool validate_path(const EdgePath& path, Horizon h, int k);

}  // namespace btz
