#include "verlinde/qdim.hpp"

namespace verlinde {

CertifiedReal two_sin(long k, long m, long prec_bits) {
    if (m < 2) throw std::invalid_argument("two_sin: need m >= 2");
    if (k % m == 0) throw std::domain_error("two_sin: zero sine (k = 0 mod m)");
    if (k < 0 || k > m) throw std::invalid_argument("two_sin: need 0 < k < m");
    CertifiedReal s = CertifiedReal::sin_pi(k, m, prec_bits);
    return s + s;
}

CertifiedReal sine_product_pow(const Partition& p, const AlcoveContext& ctx,
                               long exponent, long prec_bits) {
    Partition lam = ctx.normalize(p);
    long m = ctx.N + ctx.K;
    CertifiedReal acc = CertifiedReal::from_int(1, prec_bits);
    for (int i = 1; i <= ctx.N; ++i)
        for (int j = i + 1; j <= ctx.N; ++j) {
            long k = lam[i - 1] - i - lam[j - 1] + j;
            acc *= two_sin(k, m, prec_bits);
        }
    return acc.pow(exponent);
}

CertifiedReal qdim_sine(const Partition& p, const AlcoveContext& ctx, long prec_bits) {
    CertifiedReal num = sine_product_pow(p, ctx, 1, prec_bits);
    CertifiedReal den = sine_product_pow(Partition(ctx.N, 0), ctx, 1, prec_bits);
    return num / den;
}

CertifiedReal qdim_hook(const Partition& p, const AlcoveContext& ctx, long prec_bits) {
    Partition lam = ctx.normalize(p);
    long m = ctx.N + ctx.K;
    CertifiedReal acc = CertifiedReal::from_int(1, prec_bits);
    for (const CellStat& c : cell_stats(lam, ctx.N)) {
        // [n] = 2sin(n pi/m) / 2sin(pi/m); the 2s cancel
        acc *= two_sin(ctx.N + c.content, m, prec_bits);
        acc = acc / two_sin(c.hook_length, m, prec_bits);
    }
    return acc;
}

CertifiedReal staircase_norm(const AlcoveContext& ctx, long prec_bits) {
    return sine_product_pow(Partition(ctx.N, 0), ctx, 2, prec_bits);
}

}  // namespace verlinde
