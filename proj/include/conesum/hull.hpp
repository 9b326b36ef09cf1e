#ifndef CONESUM_HULL_HPP
#define CONESUM_HULL_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace conesum {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

// Thrown when the input is degenerate for the requested dimension (all
// points collinear for d = 2, coplanar for d = 3, or too few points).
class DegenerateHullError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct HullFaceCounts {
  std::size_t f0 = 0;
  std::size_t f1 = 0;
  std::size_t f2 = 0; // meaningful only for d = 3

  std::size_t faces(unsigned j) const {
    switch (j) {
      case 0: return f0;
      case 1: return f1;
      default: return f2;
    }
  }
};

// Face counts of the convex hull; exact for points in general position
// (continuous distributions almost surely). d = 2 uses the monotone chain,
// d = 3 an incremental hull.
HullFaceCounts hullFaces(const PointSet& points, unsigned d);

// Face counts of the Minkowski sum of the given point sets, computed as the
// hull of all cross-sums of candidate vertices. Guarded at 10^6 candidates
// (std::length_error beyond).
//
// Cross-sums of two or more 3d summands contain structurally coplanar
// quadruples (edge+edge facets of the sum), which a triangulating float hull
// miscounts; that case is routed through an exact supporting-plane
// enumeration over exactly-summed rational coordinates instead.
HullFaceCounts minkowskiHullFaces(const std::vector<PointSet>& pointSets,
                                  unsigned d);

} // namespace conesum

#endif
