#pragma once

#include "verlinde/alcove.hpp"
#include "verlinde/certified.hpp"
#include "verlinde/core.hpp"

#include <vector>

namespace verlinde {

/// Certified complex enclosure.
struct CertifiedComplex {
    CertifiedReal re;
    CertifiedReal im;

    CertifiedComplex(CertifiedReal r, CertifiedReal i) : re(std::move(r)), im(std::move(i)) {}
    static CertifiedComplex one(long prec);
    static CertifiedComplex zero(long prec);
    /// exp(2*pi*i*num/den)
    static CertifiedComplex unit_root(long num, long den, long prec);

    CertifiedComplex operator+(const CertifiedComplex& o) const;
    CertifiedComplex operator-(const CertifiedComplex& o) const;
    CertifiedComplex operator*(const CertifiedComplex& o) const;
    CertifiedComplex operator/(const CertifiedComplex& o) const;
    CertifiedComplex conj() const;
    CertifiedReal abs_sq() const;
};

/// |det(s^{2(i-1) l_j})|^2 for l = rho + lambda, evaluated as a genuinely
/// independent route: a complex Leibniz determinant at s = exp(i pi/(N+K)),
/// not a sine product.
CertifiedReal s_entry(const Partition& lam, const AlcoveContext& ctx, long prec_bits);

/// <lambda>^2 via the determinant route: s_entry(lambda)/s_entry(0).
CertifiedReal qdim_sq_det(const Partition& lam, const AlcoveContext& ctx, long prec_bits);

/// Fusion coefficients N_{lambda mu}^{nu} over the alcove, flattened as
/// tensor[(i * n + j) * n + k] with the enumeration order of the alcove.
struct FusionTensor {
    int n = 0;                     // alcove size
    std::vector<Partition> labels;
    std::vector<long> coeffs;

    long at(int i, int j, int k) const { return coeffs[(static_cast<size_t>(i) * n + j) * n + k]; }
    int index_of(const Partition& p) const;
    int dual_index(int i, const AlcoveContext& ctx) const;
};

/// Verlinde diagonalization with certified integer rounding.  The guard bounds
/// the alcove size (cost grows as |alcove|^4).
FusionTensor fusion_coeffs(const AlcoveContext& ctx, const ComputeOptions& opts = {},
                           int alcove_guard = 2000);

/// Integer-only genus-g dimension: multiplicity of the unit object in the
/// g-th power of the handle element sum_lambda lambda (x) lambda^*.
mpz_class handle_trace_dimension(const AlcoveContext& ctx, int g,
                                 const FusionTensor& tensor);
mpz_class handle_trace_dimension(const AlcoveContext& ctx, int g,
                                 const ComputeOptions& opts = {});

}  // namespace verlinde
