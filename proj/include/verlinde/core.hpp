#pragma once

#include "verlinde/alcove.hpp"
#include "verlinde/certified.hpp"

#include <array>
#include <utility>
#include <vector>

namespace verlinde {

/// Spin (or cohomological) structure on a genus-g surface, given by the values
/// of its quadratic form on the standard symplectic basis.
struct SpinStructure {
    int modulus = 2;                          // d
    std::vector<std::pair<int, int>> pairs;   // (a_nu, b_nu), one per handle

    int genus() const { return static_cast<int>(pairs.size()); }
    SpinStructure negated() const;
    void validate() const;
};

struct ComputeOptions {
    PrecisionPolicy policy{};
    int jobs = 1;
};

/// Orbit weight for the spin refinement; value in {0, 1, 1/2, -1/2}.
mpq_class epsilon(bool orbit_even, int stab_order, long a, long b);

/// Orbit weight for the cohomological refinement; value in {0, 1}.
mpq_class epsilon_coho(int stab_order, long a, long b);

/// d_{N,K}(g): genus-g Verlinde number.  g = 1 is exact counting; other
/// genera go through certified evaluation of the sine-product sum.
mpz_class verlinde_number(const AlcoveContext& ctx, int g, const ComputeOptions& opts = {});

/// d~_{N,K}(g) = d_{N,K}(g) / N'^g, with exact divisibility asserted.
mpz_class pu_verlinde_number(const AlcoveContext& ctx, int g, const ComputeOptions& opts = {});

struct SpinWitness {
    bool admissible = false;
    int j = 0;        // witness power of the simple current, when emphasized
    int modulus = 0;  // l = N / j
};

/// Existence of a spin refinement for SU(N,K); the emphasized case
/// (N even, K/N an odd integer) carries witness j = 1, l = N.
SpinWitness spin_admissible_su(int N, int K);

/// The modulo-N cohomological case for SU(N,K): N | K and (N odd or K/N even).
bool coho_admissible_su(int N, int K);

/// PU(N,K) spin case: d even with N' and K' both odd.
bool pu_spin_admissible(const AlcoveContext& ctx);

/// d_{N,K}(g, sigma), spin refinement.  Default is the emphasized modulus-N
/// case (step_power = 1); other step powers require allow_general since their
/// admissibility depends on the framing parameter.
mpz_class spin_verlinde_number(const AlcoveContext& ctx, const SpinStructure& sigma,
                               const ComputeOptions& opts = {}, int step_power = 1,
                               bool allow_general = false);

/// Cohomological refinement with acting group of order N / step_power.
mpz_class coho_verlinde_number(const AlcoveContext& ctx, int step_power,
                               const SpinStructure& sigma, const ComputeOptions& opts = {});

struct AlphaBeta {
    int alpha = 1;
    int beta = 1;
};

/// Canonical factorization d = alpha * beta with gcd(alpha,K') = gcd(beta,N')
/// = gcd(alpha,beta) = 1; primes of d dividing neither N' nor K' go to beta.
AlphaBeta alpha_beta(const AlcoveContext& ctx);

/// Twisted weight (1^N)^{twist} (x) lambda indexing the extended alcove.
struct DottedWeight {
    int twist = 0;   // in Z/alpha
    Partition lam;
};

struct PuOrbitInfo {
    int big_orbit_size = 0;  // orbit under Z/alpha x Z/N
    int orbit_size = 0;      // big_orbit_size / (alpha N')
    int stab_order = 0;      // d / orbit_size
};

PuOrbitInfo pu_orbit_info(const DottedWeight& v, const AlcoveContext& ctx, const AlphaBeta& ab);

/// d~_{N,K}(g, sigma), spin refinement of the PU theory (modulus d).
mpz_class pu_spin_verlinde_number(const AlcoveContext& ctx, const SpinStructure& sigma,
                                  const ComputeOptions& opts = {});

struct DualityReport {
    std::vector<std::array<mpz_class, 2>> rows;  // (d~_{N,K}(g), d~_{K,N}(g)) for g = 0..g_max
    bool ok = false;
};

DualityReport level_rank_check(int N, int K, int g_max, const ComputeOptions& opts = {});

enum class RefinedFlavor { Spin, Coho, PuSpin };

struct SplitReport {
    std::vector<std::pair<SpinStructure, mpz_class>> table;
    mpz_class total_refined;
    mpz_class total;
    bool ok = false;
};

/// Sums the refined values over all modulus^{2g} structures and compares with
/// the unrefined total.
SplitReport split_check(const AlcoveContext& ctx, int g, RefinedFlavor flavor,
                        const ComputeOptions& opts = {});

int refinement_modulus(const AlcoveContext& ctx, RefinedFlavor flavor);

}  // namespace verlinde
