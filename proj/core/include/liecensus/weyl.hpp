#ifndef LIECENSUS_WEYL_HPP
#define LIECENSUS_WEYL_HPP

#include "liecensus/numeric.hpp"
#include "liecensus/root_system.hpp"
#include "liecensus/weight.hpp"

namespace liecensus {

/// Exact Weyl dimension of the irreducible module with highest weight w:
///
///   dim = prod over positive roots of (w + rho, alpha) / (rho, alpha)
///
/// evaluated as one big-integer numerator and denominator with the t_i
/// denominators cleared, divided once at the end.  The quotient must be
/// an integer; a non-integer product throws internal_error.
Int weyl_dim(const LieType& type, const Weight& w);

/// Variant taking prebuilt root data (hot path for enumeration).
Int weyl_dim(const RootSystemData& rs, const Weight& w);

/// The (c+1)^l bound on weyl_dim, where c is the largest coordinate of w
/// and l the number of positive roots.
Int bn1_bound(const LieType& type, const Weight& w);

/// Highest weight of the dual module (the -w0 image).  A_n reverses the
/// vector, D_n with odd n swaps the last two coordinates, E6 applies the
/// diagram flip (1<->6, 3<->5); every other family is the identity.
Weight dual_weight(const LieType& type, const Weight& w);

bool is_self_dual(const LieType& type, const Weight& w);

} // namespace liecensus

#endif
