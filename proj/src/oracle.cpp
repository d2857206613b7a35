#include "verlinde/oracle.hpp"

#include "verlinde/qdim.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace verlinde {

CertifiedComplex CertifiedComplex::one(long prec) {
    return {CertifiedReal::from_int(1, prec), CertifiedReal(prec)};
}

CertifiedComplex CertifiedComplex::zero(long prec) {
    return {CertifiedReal(prec), CertifiedReal(prec)};
}

CertifiedComplex CertifiedComplex::unit_root(long num, long den, long prec) {
    return {CertifiedReal::cos_pi(2 * num, den, prec), CertifiedReal::sin_pi(2 * num, den, prec)};
}

CertifiedComplex CertifiedComplex::operator+(const CertifiedComplex& o) const {
    return {re + o.re, im + o.im};
}

CertifiedComplex CertifiedComplex::operator-(const CertifiedComplex& o) const {
    return {re - o.re, im - o.im};
}

CertifiedComplex CertifiedComplex::operator*(const CertifiedComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

CertifiedComplex CertifiedComplex::operator/(const CertifiedComplex& o) const {
    CertifiedReal norm = o.abs_sq();
    CertifiedComplex num = *this * o.conj();
    return {num.re / norm, num.im / norm};
}

CertifiedComplex CertifiedComplex::conj() const { return {re, -im}; }

CertifiedReal CertifiedComplex::abs_sq() const { return re * re + im * im; }

namespace {

// Leibniz determinant; fine for the small ranks the oracle handles.
CertifiedComplex leibniz_det(const std::vector<std::vector<CertifiedComplex>>& m, long prec) {
    int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CertifiedComplex acc = CertifiedComplex::zero(prec);
    int sign = 1;
    do {
        CertifiedComplex prod = CertifiedComplex::one(prec);
        for (int i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
        if (sign > 0)
            acc = acc + prod;
        else
            acc = acc - prod;
        // std::next_permutation walks lexicographically; recompute parity
        // incrementally is not worth it at these sizes.
        sign = 1;
        if (!std::next_permutation(perm.begin(), perm.end())) break;
        std::vector<int> p = perm;
        for (int i = 0; i < n; ++i)
            while (p[i] != i) {
                std::swap(p[i], p[p[i]]);
                sign = -sign;
            }
    } while (true);
    return acc;
}

std::vector<int> shifted_parts(const Partition& lam, int n) {
    // l_j = lambda_j + n - j
    std::vector<int> l(n);
    for (int j = 1; j <= n; ++j) l[j - 1] = (j <= static_cast<int>(lam.size()) ? lam[j - 1] : 0) + n - j;
    return l;
}

// chi_lambda(tau) = det(x_j^{l_i}) / Vandermonde, x_j on the unit circle at
// exponent (N t_j - T)/(N(N+K)) turns.
struct CharacterTable {
    std::vector<std::vector<CertifiedComplex>> chi;  // [lambda][tau]
    std::vector<CertifiedReal> weight;               // [tau]
};

CharacterTable build_character_table(const AlcoveContext& ctx,
                                     const std::vector<Partition>& alcove, long prec) {
    int n = static_cast<int>(alcove.size());
    long den = static_cast<long>(ctx.N) * (ctx.N + ctx.K);

    std::vector<std::vector<long>> angle_num(n, std::vector<long>(ctx.N));
    for (int t = 0; t < n; ++t) {
        std::vector<int> tp = shifted_parts(alcove[t], ctx.N);
        long total = std::accumulate(tp.begin(), tp.end(), 0L);
        for (int j = 0; j < ctx.N; ++j) angle_num[t][j] = ctx.N * tp[j] - total;
    }

    auto det_at = [&](const std::vector<int>& l, int t) {
        std::vector<std::vector<CertifiedComplex>> m;
        m.reserve(ctx.N);
        for (int i = 0; i < ctx.N; ++i) {
            std::vector<CertifiedComplex> row;
            row.reserve(ctx.N);
            for (int j = 0; j < ctx.N; ++j)
                row.push_back(CertifiedComplex::unit_root(
                    static_cast<long>(l[i]) * angle_num[t][j], den, prec));
            m.push_back(std::move(row));
        }
        return leibniz_det(m, prec);
    };

    CharacterTable table;
    std::vector<int> rho = shifted_parts(Partition{}, ctx.N);
    std::vector<CertifiedComplex> vandermonde;
    vandermonde.reserve(n);
    for (int t = 0; t < n; ++t) vandermonde.push_back(det_at(rho, t));

    table.chi.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> l = shifted_parts(alcove[i], ctx.N);
        std::vector<CertifiedComplex> row;
        row.reserve(n);
        for (int t = 0; t < n; ++t) row.push_back(det_at(l, t) / vandermonde[t]);
        table.chi.push_back(std::move(row));
    }

    // w_tau = <tau>^2 / sum <mu>^2 = <tau>^2 * staircase / (N (N+K)^{N-1})
    mpz_class dsq = ctx.N;
    for (int i = 0; i < ctx.N - 1; ++i) dsq *= ctx.N + ctx.K;
    CertifiedReal stair = staircase_norm(ctx, prec);
    CertifiedReal inv_dsq = stair / CertifiedReal::from_mpz(dsq, prec);
    table.weight.reserve(n);
    for (int t = 0; t < n; ++t) {
        CertifiedReal q = qdim_sine(alcove[t], ctx, prec);
        table.weight.push_back(q * q * inv_dsq);
    }
    return table;
}

}  // namespace

CertifiedReal s_entry(const Partition& lam, const AlcoveContext& ctx, long prec_bits) {
    if (!ctx.in_alcove(lam)) throw std::invalid_argument("s_entry: weight not in alcove");
    std::vector<int> l = shifted_parts(ctx.normalize(lam), ctx.N);
    long den = ctx.N + ctx.K;
    std::vector<std::vector<CertifiedComplex>> m;
    for (int i = 0; i < ctx.N; ++i) {
        std::vector<CertifiedComplex> row;
        for (int j = 0; j < ctx.N; ++j)
            row.push_back(CertifiedComplex::unit_root(static_cast<long>(i) * l[j], den, prec_bits));
        m.push_back(std::move(row));
    }
    return leibniz_det(m, prec_bits).abs_sq();
}

CertifiedReal qdim_sq_det(const Partition& lam, const AlcoveContext& ctx, long prec_bits) {
    return s_entry(lam, ctx, prec_bits) / s_entry(Partition{}, ctx, prec_bits);
}

int FusionTensor::index_of(const Partition& p) const {
    for (int i = 0; i < n; ++i)
        if (labels[i] == p) return i;
    throw std::invalid_argument("FusionTensor: label not found");
}

int FusionTensor::dual_index(int i, const AlcoveContext& ctx) const {
    const Partition& lam = labels[i];
    Partition dual(ctx.N);
    for (int k = 0; k < ctx.N; ++k) dual[k] = lam[0] - lam[ctx.N - 1 - k];
    return index_of(dual);
}

FusionTensor fusion_coeffs(const AlcoveContext& ctx, const ComputeOptions& opts,
                           int alcove_guard) {
    opts.policy.validate();
    FusionTensor tensor;
    tensor.labels = enumerate_alcove(ctx);
    tensor.n = static_cast<int>(tensor.labels.size());
    int n = tensor.n;
    if (n > alcove_guard)
        throw std::invalid_argument("fusion_coeffs: alcove size exceeds guard");
    tensor.coeffs.assign(static_cast<size_t>(n) * n * n, 0);

    for (long prec = opts.policy.initial_bits;; prec *= 2) {
        if (prec > opts.policy.max_bits)
            throw PrecisionExhausted("fusion_coeffs: integer entries not isolated");
        CharacterTable table = build_character_table(ctx, tensor.labels, prec);

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

        std::atomic<bool> ok{true};
        std::atomic<bool> impossible{false};
        auto work = [&](size_t begin, size_t end) {
            for (size_t p = begin; p < end && ok.load(); ++p) {
                auto [i, j] = pairs[p];
                std::vector<CertifiedComplex> partial;
                partial.reserve(n);
                for (int t = 0; t < n; ++t) {
                    CertifiedComplex w{table.weight[t], CertifiedReal(prec)};
                    partial.push_back(w * table.chi[i][t] * table.chi[j][t]);
                }
                for (int k = 0; k < n; ++k) {
                    CertifiedComplex acc = CertifiedComplex::zero(prec);
                    for (int t = 0; t < n; ++t) acc = acc + partial[t] * table.chi[k][t].conj();
                    std::optional<mpz_class> v;
                    try {
                        v = acc.re.round_to_integer(opts.policy.integrality_gap);
                    } catch (const NonIntegral&) {
                        impossible.store(true);
                        ok.store(false);
                        break;
                    }
                    if (!v || !acc.im.contains_mpq(mpq_class(0))) {
                        ok.store(false);
                        break;
                    }
                    if (*v < 0) {
                        impossible.store(true);
                        ok.store(false);
                        break;
                    }
                    long c = v->get_si();
                    tensor.coeffs[(static_cast<size_t>(i) * n + j) * n + k] = c;
                    tensor.coeffs[(static_cast<size_t>(j) * n + i) * n + k] = c;
                }
            }
        };

        int jobs = std::max(1, opts.jobs);
        if (jobs == 1) {
            work(0, pairs.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (pairs.size() + jobs - 1) / jobs;
            for (size_t b = 0; b < pairs.size(); b += chunk)
                pool.emplace_back(work, b, std::min(b + chunk, pairs.size()));
            for (auto& t : pool) t.join();
        }
        if (impossible.load())
            throw NonIntegral("fusion_coeffs: enclosure excludes non-negative integers");
        if (ok.load()) break;
    }
    return tensor;
}

mpz_class handle_trace_dimension(const AlcoveContext& ctx, int g, const FusionTensor& tensor) {
    if (g < 1) throw std::invalid_argument("handle_trace_dimension: g < 1");
    int n = tensor.n;
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) dual[i] = tensor.dual_index(i, ctx);

    // multiplication by the handle element sum_lam lam (x) lam^*
    std::vector<std::vector<mpz_class>> h(n, std::vector<mpz_class>(n, 0));
    for (int lam = 0; lam < n; ++lam)
        for (int nu = 0; nu < n; ++nu)
            for (int t = 0; t < n; ++t) {
                long c1 = tensor.at(lam, nu, t);
                if (c1 == 0) continue;
                for (int mu = 0; mu < n; ++mu) {
                    long c2 = tensor.at(dual[lam], t, mu);
                    if (c2 != 0) h[mu][nu] += static_cast<long>(c1) * c2;
                }
            }

    std::vector<mpz_class> v(n, 0);
    v[tensor.index_of(Partition(ctx.N, 0))] = 1;
    for (int step = 0; step < g; ++step) {
        std::vector<mpz_class> next(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (h[i][j] != 0 && v[j] != 0) next[i] += h[i][j] * v[j];
        v = std::move(next);
    }
    return v[tensor.index_of(Partition(ctx.N, 0))];
}

mpz_class handle_trace_dimension(const AlcoveContext& ctx, int g, const ComputeOptions& opts) {
    return handle_trace_dimension(ctx, g, fusion_coeffs(ctx, opts));
}

}  // namespace verlinde
