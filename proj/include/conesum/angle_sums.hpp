#ifndef CONESUM_ANGLE_SUMS_HPP
#define CONESUM_ANGLE_SUMS_HPP

#include <vector>

#include "conesum/cone_spec.hpp"

namespace conesum {

// Closed forms for the sums of conic intrinsic volumes of tangent cones at
// j-faces, and their verification routes via explicit enumeration. All
// results are exact rationals.

// Orthoschemes of either type: sum over j-faces of upsilon_k of the tangent
// cone equals (j!/n!) stirling1(n+1,k+1) stirling2(k+1,j+1).
Rational theoremOrthoscheme(unsigned n, unsigned j, unsigned k);

// Weyl chambers: A gives (j!/n!) stirling1(n,k) stirling2(k,j); B gives
// (2^j j!)/(2^n n!) stirling1B(n,k) stirling2B(k,j).
Rational theoremWeyl(Chamber family, unsigned n, unsigned j, unsigned k);

// Sum of upsilon_k over the composition family
// T_l = A(l_1) x ... x A(l_j) x B(l_{j+1}) x ... x B(l_{j+b}),
// closed form (j!/n!) rStirling1(n,k,b/2) rStirling2(k,j,b/2).
// Rejects (j,b) = (0,0).
Rational compositionSum(unsigned j, unsigned b, unsigned n, unsigned k);
// Same value by direct enumeration of the compositions (verification mode).
Rational compositionSumEnumerated(unsigned j, unsigned b, unsigned n, unsigned k);

// Product generalization: dispatches to the series coefficient R_d with
// d = 1 (KB/KA), 1/2 (WB), 0 (WA).
Rational productTheorem(Source source, const std::vector<unsigned>& ns,
                        unsigned j, unsigned k);

// Sum of the product theorem over all weak compositions (n_1..n_b) of n:
// (j!/n!) C(j+b-1, b-1) rStirling1(n,k,b) rStirling2(k,j,b).
Rational aggregatedProductSum(unsigned b, unsigned n, unsigned j, unsigned k);
// Verification mode: explicit sum of productTheorem over the compositions.
Rational aggregatedProductSumEnumerated(unsigned b, unsigned n, unsigned j,
                                        unsigned k);

// k = n and k = j specializations: sums of internal/external angles at
// j-faces.
Rational internalAngleSum(Source source, unsigned n, unsigned j);
Rational externalAngleSum(Source source, unsigned n, unsigned j);

// The theorem value for a single source, routed by family.
Rational tangentConeSumClosedForm(Source source, unsigned n, unsigned j,
                                  unsigned k);

// Brute-force route: sum multiplicity * upsilon_(k+shift)(spec) over the
// enumerated tangent cones.
Rational tangentConeSumEnumerated(Source source, unsigned n, unsigned j,
                                  unsigned k);
Rational tangentConeSumEnumerated(const TangentConeMultiset& cones, unsigned k);

// True iff some enumerated tangent cone is a linear subspace; the conic
// Gauss-Bonnet alternating-sum identity does not apply there.
bool enumerationContainsSubspace(const TangentConeMultiset& cones);

} // namespace conesum

#endif
