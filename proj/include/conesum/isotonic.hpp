#ifndef CONESUM_ISOTONIC_HPP
#define CONESUM_ISOTONIC_HPP

#include <vector>

#include "conesum/cone_spec.hpp"

namespace conesum {

// Least-squares fit of a nonincreasing sequence to x (pool adjacent
// violators); the metric projection onto the chamber A(n).
std::vector<double> pavaNonincreasing(const std::vector<double>& x);

// Allocation-free variant for hot sampling loops: the workspace is reused
// across calls.
class ChamberProjector {
public:
  void project(Chamber family, const double* x, std::size_t n,
               std::vector<double>& out);

private:
  std::vector<double> blockSum_;
  std::vector<std::size_t> blockLen_;
};

// Metric projection onto A(n) (isotonic regression) or B(n) (isotonic
// regression followed by a componentwise clamp at 0). The B composition is
// not assumed correct a priori; it is gated by the face-enumeration
// least-squares oracle in the tests.
std::vector<double> projectChamber(Chamber family, const std::vector<double>& x);

// Dimension of the face whose relative interior contains the projected
// point p (p laid out factor by factor): constant blocks per A-factor,
// positive constant blocks per B-factor. Components within `tol` relative
// of their neighbor are merged; ties have probability zero for Gaussian
// inputs, so the tolerance only absorbs floating-point error.
unsigned projectionFaceDim(const ConeSpec& spec, const std::vector<double>& p,
                           double tol = 1e-9);

// Reference projection for the verification suites: enumerate every face of
// the chamber, solve the equality-constrained least squares on each (block
// means, zero tail for B), and keep the feasible minimizer. Exponential in
// n; intended for n <= 6.
std::vector<double> projectChamberByFaceEnumeration(Chamber family,
                                                    const std::vector<double>& x);

} // namespace conesum

#endif
