#ifndef CONESUM_LP_HPP
#define CONESUM_LP_HPP

#include <cstdint>
#include <vector>

#include "conesum/cone_spec.hpp"
#include "conesum/rng.hpp"

namespace conesum {

// Homogeneous polyhedral cone {v : ineqs v <= 0, eqs v = 0} in R^dim.
struct ConeSystem {
  unsigned dim = 0;
  std::vector<std::vector<double>> ineqs;
  std::vector<std::vector<double>> eqs;
};

// Cone system of a product of chambers in factor-by-factor coordinates.
ConeSystem coneSystemFromSpec(const ConeSpec& spec);

enum class LpStatus { Feasible, Infeasible, Inconclusive };

// Phase-I dense simplex (Bland's rule, free variables split) deciding
// whether {v : ineqRows v <= rhsIneq... } given below is non-empty:
//   eqRows v = eqRhs, ineqRows v <= 0. Tolerance is absolute on the
// phase-I objective; Inconclusive is returned on iteration-cap overrun.
LpStatus lpFeasible(unsigned dim, const std::vector<std::vector<double>>& ineqRows,
                    const std::vector<std::vector<double>>& eqRows,
                    const std::vector<double>& eqRhs, double tol = 1e-9,
                    int maxIters = 5000);

enum class KernelResult {
  Intersects,   // some nonzero v in the cone with Gv = 0
  TrivialOnly,  // the intersection is {0}
  Inconclusive, // LP failed to decide within tolerance/iteration budget
};

// Decides whether ker G meets the cone in a nonzero point. A nonzero
// intersection ray has almost surely nonzero inner product with the
// Gaussian probe w, so scaling it to <w,v> = +1 or -1 leaves a feasible
// point of one of the two LPs; both infeasible means the intersection is
// trivial. G has k rows (k may be 0) of cone.dim columns.
KernelResult coneKernelIntersects(const ConeSystem& cone,
                                  const std::vector<std::vector<double>>& G,
                                  RngStream& probe, double tol = 1e-9);

} // namespace conesum

#endif
