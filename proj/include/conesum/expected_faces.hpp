#ifndef CONESUM_EXPECTED_FACES_HPP
#define CONESUM_EXPECTED_FACES_HPP

#include <vector>

#include "conesum/cone_spec.hpp"

namespace conesum {

enum class WalkKind { Walk, Bridge };

// A Minkowski sum of b Gaussian random-walk (or bridge) convex hulls in R^d,
// with ns[i] steps in the i-th summand. The face-number theorems require
// d <= sum(ns).
struct WalkEnsemble {
  unsigned d = 2;
  std::vector<unsigned> ns;
  WalkKind kind = WalkKind::Walk;

  unsigned b() const { return static_cast<unsigned>(ns.size()); }
  unsigned totalSteps() const;
};

// Expected number of j-faces of the Minkowski sum:
//   2 sum_{l>=1, d-2l+1>=0} R_1(d-2l+1, j, b, ns),
// identical for walks and bridges. Requires 0 <= j < d <= sum(ns).
Rational expectedFaces(const WalkEnsemble& ens, unsigned j);

// The known single-hull closed form,
//   (2 j!/n!) sum_{l>=0} stirling1(n+1, d-2l) stirling2(d-2l, j+1).
Rational expectedFacesSingleClosedForm(unsigned d, unsigned n, unsigned j);

// Grassmann angle gamma_k(C) = 2 sum_{i odd} upsilon_{k+i}(C). Throws
// std::domain_error when the spec is a linear subspace, where the relation
// does not hold.
Rational grassmannAngle(const ConeSpec& spec, unsigned k);

// Probability of unique recovery of the face-uniform random signal of the
// respective family from k Gaussian measurements (the displayed closed
// forms):
//   WB: 2^(j+1) j! / (2^n n! C(n,j)) sum_{i odd} s1B(n,k-i) s2B(k-i,j)
//   WA: 2 j! / (n! C(n-1,j-1))      sum_{i odd} s1(n,k-i) s2(k-i,j)
//   KB, KA: 2 j! / (n! C(n+1,j+1))  sum_{i even} s1(n+1,k-i) s2(k-i,j+1)
// Preconditions: 0 <= j <= k <= n, and j >= 1 for WA.
Rational recoveryProbability(Source family, unsigned n, unsigned j, unsigned k);

// The propositions' proof route: (1/f_j) sum over enumerated tangent cones of
// (1 - gamma_(k+shift)). Requires every enumerated cone to be a non-subspace
// (true for j < n); throws std::domain_error otherwise.
Rational recoveryProbabilityViaAngles(Source family, unsigned n, unsigned j,
                                      unsigned k);

// Enumeration route for the expected face count:
//   2 sum over j-face tangent cones of (upsilon_{d-1} + upsilon_{d-3} + ...).
Rational expectedFacesViaEnumeration(const WalkEnsemble& ens, unsigned j);

} // namespace conesum

#endif
