#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace verlinde {

/// Young diagram: weakly decreasing non-negative parts, trailing zeros allowed.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);

/// Transpose (conjugate) diagram.
Partition transpose(const Partition& p);

int partition_size(const Partition& p);

struct CellStat {
    int content;      // j - i
    int hook_length;  // lambda_i + lambda^t_j - i - j + 1
};

/// One (content, hook length) entry per cell, row by row.
/// `rows` bounds the number of nonzero rows (must be >= actual rows).
std::vector<CellStat> cell_stats(const Partition& p, int rows);

/// The pair (N, K) with its derived quantities.  Validates N, K >= 2.
struct AlcoveContext {
    int N;
    int K;
    int d;        // gcd(N, K)
    int N_red;    // N / d
    int K_red;    // K / d

    AlcoveContext(int n, int k);

    bool in_alcove(const Partition& p) const;
    /// Pads to exactly N parts; rejects anything outside the alcove.
    Partition normalize(const Partition& p) const;
};

/// Every (l1,...,lN) with K >= l1 >= ... >= l_{N-1} >= lN = 0, in
/// lexicographically descending order on (l1,...,l_{N-1}).  This ordering is
/// part of the public contract (stable golden output).
std::vector<Partition> enumerate_alcove(const AlcoveContext& ctx);

mpz_class alcove_cardinality(const AlcoveContext& ctx);  // binomial(N+K-1, N-1)

/// Generator of the order-N rotation:
/// (l1,...,l_{N-1},0) -> (K,l1,...,l_{N-1}) - (l_{N-1},...,l_{N-1}).
Partition rho_step(const Partition& p, const AlcoveContext& ctx);

struct OrbitInfo {
    std::vector<Partition> orbit;  // starts at the given element
    int orbit_size = 0;
    int stab_order = 0;
};

/// Orbit of `p` under the cyclic group generated by the step_power-th iterate
/// of rho_step (group order N / step_power; step_power must divide N).
OrbitInfo orbit_info(const Partition& p, const AlcoveContext& ctx, int step_power = 1);

}  // namespace verlinde
