#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace verlinde {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Symmetric integer linking matrix of a framed link.
struct LinkingMatrix {
    IntMatrix entries;

    explicit LinkingMatrix(IntMatrix m);
    int size() const { return static_cast<int>(entries.size()); }
    std::vector<mpz_class> diagonal() const;
};

/// Smith decomposition U * B * V = diag(invariants), U and V unimodular.
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    std::vector<mpz_class> invariants;  // d_1 | d_2 | ... (non-negative)
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Complete solution set of B c = (d/2) diag(B) mod d over Z/d.
struct CharSolutionSet {
    bool solvable = false;
    mpz_class count = 0;
    std::vector<long> particular;                  // one solution, entries in [0, d)
    std::vector<std::vector<long>> kernel_basis;   // generators of the mod-d kernel
    std::vector<long> kernel_orders;               // additive order of each generator

    /// Materializes all solutions (count must be small).
    std::vector<std::vector<long>> enumerate(long d) const;
};

CharSolutionSet solve_characteristic(const LinkingMatrix& b, long d);

mpz_class count_structures(const LinkingMatrix& b, long d);

}  // namespace verlinde
