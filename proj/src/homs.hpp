#pragma once

#include "coalgebra.hpp"
#include "schur.hpp"

namespace affschur {

/// [Sigma_{i,j} : Sigma_{i,j,eps}] for the split of x.
std::uint64_t collapse_index(const BasisIndex& x, std::int64_t n);

/// xi_{i,j+n eps} -> c^{ht eps} xi_{i,j+n s eps}; s = 0 gives psi_{c,0}.
/// The parameter c must be invertible (a monomial).
Element psi(const Laurent& c, std::int64_t s, const Element& x);
Element psi_as(std::int64_t s, const Element& x);
/// Onto the finite subalgebra: a^{ht eps} [Sigma_{i,j} : Sigma_{i,j,eps}] xi_{i,j}.
Element psi_a(const Element& x);
Element psi_a0(const Element& x);

/// S(n, n+r)~ -> S(n, r)~ dual to multiplication by the affine determinant
/// with parameter c.
Element det_tilde_sharp(const Element& x, const Laurent& c);
Element det_tilde_sharp(const Element& x);
/// The same map evaluated by summing over sigma and eps in [-bound, bound]^n.
Element det_tilde_sharp_bounded(const Element& x, const Laurent& c, std::int64_t bound);
/// Bound used by det_tilde_sharp_bounded when none is given.
std::int64_t det_sharp_bound(const Element& x);
/// Finite version; x must be supported on the finite subalgebra.
Element det_star(const Element& x);

/// phi_{c,s} on coordinates, as a row-finite map on S(n,r)~.
RowFiniteMap phi_map(const Laurent& c, std::int64_t s, std::int64_t n, int r);
/// Multiplication by the affine determinant, A(n,r)~ -> A(n,n+r)~.
RowFiniteMap det_multiplication_map(const Laurent& c, std::int64_t n, int r);

}  // namespace affschur
