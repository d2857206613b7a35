#include "verlinde/alcove.hpp"

#include <algorithm>
#include <numeric>

namespace verlinde {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty() || p[0] == 0) return t;
    t.resize(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++t[j];
    return t;
}

int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

std::vector<CellStat> cell_stats(const Partition& p, int rows) {
    if (!is_partition(p)) throw std::invalid_argument("cell_stats: not a partition");
    int nonzero = 0;
    for (int part : p)
        if (part > 0) ++nonzero;
    if (nonzero > rows) throw std::invalid_argument("cell_stats: more rows than allowed");
    Partition t = transpose(p);
    std::vector<CellStat> out;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int j = 1; j <= p[i - 1]; ++j)
            out.push_back({j - i, p[i - 1] + t[j - 1] - i - j + 1});
    return out;
}

AlcoveContext::AlcoveContext(int n, int k) : N(n), K(k) {
    if (n < 2 || k < 2) throw std::invalid_argument("AlcoveContext: need N, K >= 2");
    d = std::gcd(n, k);
    N_red = n / d;
    K_red = k / d;
}

bool AlcoveContext::in_alcove(const Partition& p) const {
    if (!is_partition(p)) return false;
    if (static_cast<int>(p.size()) > N) {
        for (size_t i = N; i < p.size(); ++i)
            if (p[i] != 0) return false;
    }
    if (!p.empty() && p[0] > K) return false;
    // lambda_N must be zero
    if (static_cast<int>(p.size()) >= N && p[N - 1] != 0) return false;
    return true;
}

Partition AlcoveContext::normalize(const Partition& p) const {
    if (!in_alcove(p)) throw std::invalid_argument("weight outside the alcove");
    Partition out(p.begin(), p.begin() + std::min<size_t>(p.size(), N));
    out.resize(N, 0);
    return out;
}

std::vector<Partition> enumerate_alcove(const AlcoveContext& ctx) {
    std::vector<Partition> out;
    Partition cur;
    cur.reserve(ctx.N);
    // descending lexicographic on the first N-1 entries
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == ctx.N - 1) {
            Partition full = cur;
            full.push_back(0);
            out.push_back(std::move(full));
            return;
        }
        int hi = depth == 0 ? ctx.K : cur[depth - 1];
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

mpz_class alcove_cardinality(const AlcoveContext& ctx) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), ctx.N + ctx.K - 1, ctx.N - 1);
    return r;
}

Partition rho_step(const Partition& p, const AlcoveContext& ctx) {
    Partition lam = ctx.normalize(p);
    int last = lam[ctx.N - 2];
    Partition out(ctx.N);
    out[0] = ctx.K - last;
    for (int i = 1; i < ctx.N; ++i) out[i] = lam[i - 1] - last;
    return out;
}

OrbitInfo orbit_info(const Partition& p, const AlcoveContext& ctx, int step_power) {
    if (step_power < 1 || ctx.N % step_power != 0)
        throw std::invalid_argument("orbit_info: step_power must divide N");
    int group_order = ctx.N / step_power;
    OrbitInfo info;
    Partition start = ctx.normalize(p);
    Partition cur = start;
    do {
        info.orbit.push_back(cur);
        for (int i = 0; i < step_power; ++i) cur = rho_step(cur, ctx);
    } while (cur != start);
    info.orbit_size = static_cast<int>(info.orbit.size());
    if (group_order % info.orbit_size != 0)
        throw std::logic_error("orbit_info: orbit size does not divide group order");
    info.stab_order = group_order / info.orbit_size;
    return info;
}

}  // namespace verlinde
