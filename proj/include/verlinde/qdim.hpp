#pragma once

#include "verlinde/alcove.hpp"
#include "verlinde/certified.hpp"

namespace verlinde {

/// Enclosure of 2*sin(k*pi/m) for 0 < k < m; certified positive.
/// k = 0 mod m signals an out-of-alcove weight and is rejected.
CertifiedReal two_sin(long k, long m, long prec_bits);

/// Quantum dimension as the sine-product ratio
///   prod_{i<j} 2sin((l_i-i-l_j+j)pi/(N+K)) / prod_{i<j} 2sin((j-i)pi/(N+K)).
CertifiedReal qdim_sine(const Partition& p, const AlcoveContext& ctx, long prec_bits);

/// Quantum dimension as the hook-content product prod_cells [N+cn]/[hl],
/// with [n] = sin(n pi/(N+K)) / sin(pi/(N+K)).
CertifiedReal qdim_hook(const Partition& p, const AlcoveContext& ctx, long prec_bits);

/// prod_{i<j} (2 sin((j-i)pi/(N+K)))^2, the squared staircase sine product.
CertifiedReal staircase_norm(const AlcoveContext& ctx, long prec_bits);

/// prod_{i<j} 2sin((l_i-i-l_j+j)pi/(N+K)) raised to `exponent`.
CertifiedReal sine_product_pow(const Partition& p, const AlcoveContext& ctx,
                               long exponent, long prec_bits);

}  // namespace verlinde
