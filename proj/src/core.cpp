#include "verlinde/core.hpp"

#include "verlinde/qdim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace verlinde {

namespace {

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

mpz_class pow_mpz(long base, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

struct WeightedTerm {
    mpq_class weight;
    Partition lam;
};

// scale * pref_base^{g-1} * sum_i w_i * (sine product of lam_i)^{2-2g},
// certified-rounded.  Genus 1 never touches a float.
mpz_class eval_weighted_sum(const AlcoveContext& ctx, int g, long pref_base,
                            const mpq_class& scale, const std::vector<WeightedTerm>& terms,
                            const ComputeOptions& opts) {
    if (g == 1) {
        mpq_class total(0);
        for (const auto& t : terms) total += t.weight;
        total *= scale;
        total.canonicalize();
        if (total.get_den() != 1)
            throw NonIntegral("exact genus-1 sum is not an integer: " + total.get_str());
        if (total < 0)
            throw NonIntegral("genus-1 sum is negative: " + total.get_str());
        return total.get_num();
    }

    mpq_class factor = scale;
    if (g >= 1) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(pref_base),
                      static_cast<unsigned long>(g - 1));
        factor *= p;
    } else {
        factor /= pref_base;  // g = 0
    }
    factor.canonicalize();

    long exponent = 2 - 2 * g;
    int jobs = std::max(1, opts.jobs);

    return eval_integer(opts.policy, [&](long prec) {
        std::vector<CertifiedReal> vals(terms.size(), CertifiedReal(prec));
        auto work = [&](size_t begin, size_t end) {
            for (size_t i = begin; i < end; ++i) {
                vals[i] = CertifiedReal::from_mpq(terms[i].weight, prec) *
                          sine_product_pow(terms[i].lam, ctx, exponent, prec);
            }
        };
        if (jobs == 1 || terms.size() < 32) {
            work(0, terms.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (terms.size() + jobs - 1) / jobs;
            for (size_t b = 0; b < terms.size(); b += chunk)
                pool.emplace_back(work, b, std::min(b + chunk, terms.size()));
            for (auto& t : pool) t.join();
        }
        // fixed reduction order, independent of the job count
        CertifiedReal acc(prec);
        for (const auto& v : vals) acc += v;
        return CertifiedReal::from_mpq(factor, prec) * acc;
    });
}

mpq_class sigma_weight_spin(const OrbitInfo& info, const SpinStructure& sigma) {
    bool even = info.orbit_size % 2 == 0;
    mpq_class w(1);
    for (auto [a, b] : sigma.pairs) {
        w *= epsilon(even, info.stab_order, a, b);
        if (w == 0) return w;
    }
    mpq_class orb_sq(info.orbit_size);
    orb_sq *= info.orbit_size;
    for (int nu = 0; nu < sigma.genus(); ++nu) w /= orb_sq;
    return w;
}

}  // namespace

SpinStructure SpinStructure::negated() const {
    SpinStructure out = *this;
    for (auto& [a, b] : out.pairs) {
        a = static_cast<int>(floor_mod(-a, modulus));
        b = static_cast<int>(floor_mod(-b, modulus));
    }
    return out;
}

void SpinStructure::validate() const {
    if (modulus < 1) throw std::invalid_argument("SpinStructure: modulus < 1");
    if (pairs.empty()) throw std::invalid_argument("SpinStructure: genus must be >= 1");
}

mpq_class epsilon(bool orbit_even, int stab_order, long a, long b) {
    if (stab_order < 1) throw std::invalid_argument("epsilon: stab_order < 1");
    if (orbit_even) {
        return (floor_mod(a, stab_order) == 0 && floor_mod(b, stab_order) == 0) ? mpq_class(1)
                                                                                : mpq_class(0);
    }
    if (stab_order % 2 != 0)
        throw std::domain_error("epsilon: odd orbit with odd stabilizer order");
    long half = stab_order / 2;
    if (floor_mod(a, half) != 0 || floor_mod(b, half) != 0) return mpq_class(0);
    long ta = floor_mod(a, stab_order) / half;  // 0 or 1
    long tb = floor_mod(b, stab_order) / half;
    return (ta * tb) % 2 != 0 ? mpq_class(-1, 2) : mpq_class(1, 2);
}

mpq_class epsilon_coho(int stab_order, long a, long b) {
    if (stab_order < 1) throw std::invalid_argument("epsilon_coho: stab_order < 1");
    return (floor_mod(a, stab_order) == 0 && floor_mod(b, stab_order) == 0) ? mpq_class(1)
                                                                            : mpq_class(0);
}

mpz_class verlinde_number(const AlcoveContext& ctx, int g, const ComputeOptions& opts) {
    if (g < 0) throw std::invalid_argument("verlinde_number: g < 0");
    auto alcove = enumerate_alcove(ctx);
    if (g == 1) return mpz_class(static_cast<long>(alcove.size()));
    std::vector<WeightedTerm> terms;
    terms.reserve(alcove.size());
    for (auto& lam : alcove) terms.push_back({mpq_class(1), std::move(lam)});
    long pref_base = 1;
    for (int i = 0; i < ctx.N - 1; ++i) pref_base *= ctx.N + ctx.K;
    pref_base *= ctx.N;
    return eval_weighted_sum(ctx, g, pref_base, mpq_class(1), terms, opts);
}

mpz_class pu_verlinde_number(const AlcoveContext& ctx, int g, const ComputeOptions& opts) {
    mpz_class total = verlinde_number(ctx, g, opts);
    mpz_class divisor = pow_mpz(ctx.N_red, g);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), divisor.get_mpz_t());
    if (r != 0)
        throw NonIntegral("d_{N,K}(g) not divisible by N'^g: " + total.get_str() + " / " +
                          divisor.get_str());
    return q;
}

SpinWitness spin_admissible_su(int N, int K) {
    if (N < 2 || K < 2) return {};
    int d = std::gcd(N, K);
    int Np = N / d, Kp = K / d;
    auto two_exponent = [](int v) {
        int e = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++e;
        }
        return e;
    };
    bool admissible = false;
    if (d % 2 == 0) {
        admissible = Np % 2 == 1 && two_exponent(Kp) % 2 == 0;
    } else {
        int e = two_exponent(N);
        admissible = e > 0 && e % 2 == 0;
    }
    SpinWitness w;
    w.admissible = admissible;
    if (N % 2 == 0 && K % N == 0 && (K / N) % 2 == 1) {
        w.j = 1;
        w.modulus = N;
    }
    return w;
}

bool coho_admissible_su(int N, int K) {
    return K % N == 0 && (N % 2 == 1 || (K / N) % 2 == 0);
}

bool pu_spin_admissible(const AlcoveContext& ctx) {
    return ctx.d % 2 == 0 && ctx.N_red % 2 == 1 && ctx.K_red % 2 == 1;
}

mpz_class spin_verlinde_number(const AlcoveContext& ctx, const SpinStructure& sigma,
                               const ComputeOptions& opts, int step_power, bool allow_general) {
    sigma.validate();
    if (step_power < 1 || ctx.N % step_power != 0)
        throw std::invalid_argument("spin_verlinde: step_power must divide N");
    int modulus = ctx.N / step_power;
    if (step_power == 1) {
        SpinWitness w = spin_admissible_su(ctx.N, ctx.K);
        if (w.j != 1)
            throw std::invalid_argument(
                "spin_verlinde: (N,K) is not modulo-N spin admissible (need N even, K/N odd)");
    } else if (!allow_general) {
        throw std::invalid_argument(
            "spin_verlinde: general step powers must be enabled explicitly");
    }
    if (modulus % 2 != 0)
        throw std::invalid_argument("spin_verlinde: refinement modulus must be even");
    if (sigma.modulus != modulus)
        throw std::invalid_argument("spin_verlinde: sigma modulus must equal N/step_power");

    std::vector<WeightedTerm> terms;
    for (auto& lam : enumerate_alcove(ctx)) {
        OrbitInfo info = orbit_info(lam, ctx, step_power);
        mpq_class w = sigma_weight_spin(info, sigma);
        if (w != 0) terms.push_back({std::move(w), std::move(lam)});
    }
    long pref_base = 1;
    for (int i = 0; i < ctx.N - 1; ++i) pref_base *= ctx.N + ctx.K;
    pref_base *= ctx.N;
    return eval_weighted_sum(ctx, sigma.genus(), pref_base, mpq_class(1), terms, opts);
}

mpz_class coho_verlinde_number(const AlcoveContext& ctx, int step_power,
                               const SpinStructure& sigma, const ComputeOptions& opts) {
    sigma.validate();
    if (step_power < 1 || ctx.N % step_power != 0)
        throw std::invalid_argument("coho_verlinde: step_power must divide N");
    int modulus = ctx.N / step_power;
    if (sigma.modulus != modulus)
        throw std::invalid_argument("coho_verlinde: sigma modulus must equal N/step_power");

    std::vector<WeightedTerm> terms;
    for (auto& lam : enumerate_alcove(ctx)) {
        OrbitInfo info = orbit_info(lam, ctx, step_power);
        mpq_class w(1);
        for (auto [a, b] : sigma.pairs) {
            w *= epsilon_coho(info.stab_order, a, b);
            if (w == 0) break;
        }
        if (w == 0) continue;
        mpq_class orb_sq(info.orbit_size);
        orb_sq *= info.orbit_size;
        for (int nu = 0; nu < sigma.genus(); ++nu) w /= orb_sq;
        terms.push_back({std::move(w), std::move(lam)});
    }
    long pref_base = 1;
    for (int i = 0; i < ctx.N - 1; ++i) pref_base *= ctx.N + ctx.K;
    pref_base *= ctx.N;
    return eval_weighted_sum(ctx, sigma.genus(), pref_base, mpq_class(1), terms, opts);
}

AlphaBeta alpha_beta(const AlcoveContext& ctx) {
    AlphaBeta ab;
    int rest = ctx.d;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        int pe = 1;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
        }
        if (ctx.N_red % p == 0)
            ab.alpha *= pe;
        else
            ab.beta *= pe;  // primes dividing K' or neither
    }
    return ab;
}

PuOrbitInfo pu_orbit_info(const DottedWeight& v, const AlcoveContext& ctx, const AlphaBeta& ab) {
    if (!ctx.in_alcove(v.lam)) throw std::invalid_argument("pu_orbit_info: weight not in alcove");
    DottedWeight start{static_cast<int>(floor_mod(v.twist, ab.alpha)), ctx.normalize(v.lam)};
    std::vector<std::pair<int, Partition>> stack{{start.twist, start.lam}};
    std::map<std::pair<int, Partition>, bool> seen{{{start.twist, start.lam}, true}};
    while (!stack.empty()) {
        auto [i0, l0] = stack.back();
        stack.pop_back();
        std::pair<int, Partition> n1{(i0 + 1) % ab.alpha, l0};
        std::pair<int, Partition> n2{static_cast<int>(floor_mod(i0 + l0[ctx.N - 2], ab.alpha)),
                                     rho_step(l0, ctx)};
        for (auto& nb : {n1, n2}) {
            if (!seen.count(nb)) {
                seen.emplace(nb, true);
                stack.push_back(nb);
            }
        }
    }
    PuOrbitInfo info;
    info.big_orbit_size = static_cast<int>(seen.size());
    int unit = ab.alpha * ctx.N_red;
    if (info.big_orbit_size % unit != 0)
        throw std::logic_error("pu_orbit_info: orbit size not divisible by alpha*N'");
    info.orbit_size = info.big_orbit_size / unit;
    if (ctx.d % info.orbit_size != 0)
        throw std::logic_error("pu_orbit_info: reduced orbit size does not divide d");
    info.stab_order = ctx.d / info.orbit_size;
    return info;
}

mpz_class pu_spin_verlinde_number(const AlcoveContext& ctx, const SpinStructure& sigma,
                                  const ComputeOptions& opts) {
    sigma.validate();
    if (!pu_spin_admissible(ctx))
        throw std::invalid_argument(
            "pu_spin_verlinde: need d even with N' and K' both odd");
    if (sigma.modulus != ctx.d)
        throw std::invalid_argument("pu_spin_verlinde: sigma modulus must equal gcd(N,K)");

    AlphaBeta ab = alpha_beta(ctx);
    int unit = ab.alpha * ctx.N_red;
    int g = sigma.genus();

    // orbit data shared across each Z/alpha x Z/N orbit
    std::map<std::pair<int, Partition>, PuOrbitInfo> cache;
    std::vector<WeightedTerm> terms;
    for (auto& lam : enumerate_alcove(ctx)) {
        for (int iota = 0; iota < ab.alpha; ++iota) {
            DottedWeight v{iota, lam};
            auto key = std::make_pair(iota, lam);
            auto it = cache.find(key);
            PuOrbitInfo info;
            if (it != cache.end()) {
                info = it->second;
            } else {
                info = pu_orbit_info(v, ctx, ab);
                cache.emplace(key, info);
            }
            bool even = info.orbit_size % 2 == 0;
            mpq_class w(1);
            for (auto [a, b] : sigma.pairs) {
                w *= epsilon(even, info.stab_order, a, b);
                if (w == 0) break;
            }
            if (w == 0) continue;
            mpq_class ratio_sq(unit, info.big_orbit_size);
            ratio_sq *= ratio_sq;
            ratio_sq.canonicalize();
            for (int nu = 0; nu < g; ++nu) w *= ratio_sq;
            terms.push_back({std::move(w), lam});
        }
    }
    long pref_base = 1;
    for (int i = 0; i < ctx.N - 1; ++i) pref_base *= ctx.N + ctx.K;
    pref_base *= ctx.d;
    mpq_class scale(1, unit);
    return eval_weighted_sum(ctx, g, pref_base, scale, terms, opts);
}

DualityReport level_rank_check(int N, int K, int g_max, const ComputeOptions& opts) {
    if (g_max < 0) throw std::invalid_argument("level_rank_check: g_max < 0");
    AlcoveContext a(N, K), b(K, N);
    DualityReport report;
    report.ok = true;
    for (int g = 0; g <= g_max; ++g) {
        mpz_class lhs = pu_verlinde_number(a, g, opts);
        mpz_class rhs = pu_verlinde_number(b, g, opts);
        if (lhs != rhs) report.ok = false;
        report.rows.push_back({std::move(lhs), std::move(rhs)});
    }
    return report;
}

int refinement_modulus(const AlcoveContext& ctx, RefinedFlavor flavor) {
    switch (flavor) {
        case RefinedFlavor::Spin:
        case RefinedFlavor::Coho:
            return ctx.N;
        case RefinedFlavor::PuSpin:
            return ctx.d;
    }
    throw std::logic_error("refinement_modulus: bad flavor");
}

SplitReport split_check(const AlcoveContext& ctx, int g, RefinedFlavor flavor,
                        const ComputeOptions& opts) {
    if (g < 1) throw std::invalid_argument("split_check: g < 1");
    int m = refinement_modulus(ctx, flavor);
    SplitReport report;
    report.total = flavor == RefinedFlavor::PuSpin ? pu_verlinde_number(ctx, g, opts)
                                                   : verlinde_number(ctx, g, opts);
    report.total_refined = 0;

    std::vector<int> digits(2 * g, 0);
    while (true) {
        SpinStructure sigma;
        sigma.modulus = m;
        for (int nu = 0; nu < g; ++nu)
            sigma.pairs.emplace_back(digits[2 * nu], digits[2 * nu + 1]);
        mpz_class v;
        switch (flavor) {
            case RefinedFlavor::Spin:
                v = spin_verlinde_number(ctx, sigma, opts);
                break;
            case RefinedFlavor::Coho:
                v = coho_verlinde_number(ctx, 1, sigma, opts);
                break;
            case RefinedFlavor::PuSpin:
                v = pu_spin_verlinde_number(ctx, sigma, opts);
                break;
        }
        report.total_refined += v;
        report.table.emplace_back(std::move(sigma), std::move(v));

        int pos = 0;
        while (pos < 2 * g && ++digits[pos] == m) digits[pos++] = 0;
        if (pos == 2 * g) break;
    }
    report.ok = report.total_refined == report.total;
    return report;
}

}  // namespace verlinde
