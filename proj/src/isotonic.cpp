#include "conesum/isotonic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace conesum {

void ChamberProjector::project(Chamber family, const double* x, std::size_t n,
                               std::vector<double>& out) {
  blockSum_.clear();
  blockLen_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    blockSum_.push_back(x[i]);
    blockLen_.push_back(1);
    // merge while the fit would be increasing
    while (blockSum_.size() >= 2) {
      const std::size_t m = blockSum_.size();
      const double left = blockSum_[m - 2] / static_cast<double>(blockLen_[m - 2]);
      const double right = blockSum_[m - 1] / static_cast<double>(blockLen_[m - 1]);
      if (left >= right) break;
      blockSum_[m - 2] += blockSum_[m - 1];
      blockLen_[m - 2] += blockLen_[m - 1];
      blockSum_.pop_back();
      blockLen_.pop_back();
    }
  }
  out.clear();
  for (std::size_t b = 0; b < blockSum_.size(); ++b) {
    double v = blockSum_[b] / static_cast<double>(blockLen_[b]);
    if (family == Chamber::B) v = std::max(v, 0.0);
    out.insert(out.end(), blockLen_[b], v);
  }
}

std::vector<double> pavaNonincreasing(const std::vector<double>& x) {
  ChamberProjector projector;
  std::vector<double> out;
  projector.project(Chamber::A, x.data(), x.size(), out);
  return out;
}

std::vector<double> projectChamber(Chamber family, const std::vector<double>& x) {
  ChamberProjector projector;
  std::vector<double> out;
  projector.project(family, x.data(), x.size(), out);
  return out;
}

std::vector<double> projectChamberByFaceEnumeration(Chamber family,
                                                    const std::vector<double>& x) {
  const unsigned n = static_cast<unsigned>(x.size());
  if (n > 24)
    throw std::invalid_argument("projectChamberByFaceEnumeration: n too large");
  std::vector<double> best(n, 0.0);
  double bestDist = std::numeric_limits<double>::infinity();
  if (family == Chamber::B) {
    // the all-zero face is always feasible
    bestDist = 0.0;
    for (double v : x) bestDist += v * v;
  }
  const unsigned zeroMax = (family == Chamber::B) ? n : 0;
  for (unsigned zeros = 0; zeros <= zeroMax; ++zeros) {
    const unsigned m = n - zeros;
    if (m == 0) continue;
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
      std::vector<double> cand(n, 0.0);
      bool feasible = true;
      double prevMean = std::numeric_limits<double>::infinity();
      unsigned start = 0;
      for (unsigned i = 0; i < m && feasible; ++i) {
        const bool boundary = (i == m - 1) || ((mask >> i) & 1u);
        if (!boundary) continue;
        double sum = 0.0;
        for (unsigned t = start; t <= i; ++t) sum += x[t];
        const double mean = sum / static_cast<double>(i - start + 1);
        if (mean > prevMean) feasible = false;
        if (family == Chamber::B && mean < 0.0) feasible = false;
        for (unsigned t = start; t <= i; ++t) cand[t] = mean;
        prevMean = mean;
        start = i + 1;
      }
      if (!feasible) continue;
      double dist = 0.0;
      for (unsigned t = 0; t < n; ++t) dist += (x[t] - cand[t]) * (x[t] - cand[t]);
      if (dist < bestDist) {
        bestDist = dist;
        best = cand;
      }
    }
  }
  return best;
}

unsigned projectionFaceDim(const ConeSpec& spec, const std::vector<double>& p,
                           double tol) {
  if (p.size() != spec.ambientDim())
    throw std::invalid_argument("projectionFaceDim: dimension mismatch");
  auto close = [tol](double a, double b) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
  };
  unsigned dim = 0;
  std::size_t offset = 0;
  for (const auto& f : spec.factors()) {
    for (unsigned i = 0; i < f.size; ++i) {
      const double v = p[offset + i];
      const bool newBlock = (i == 0) || !close(v, p[offset + i - 1]);
      if (!newBlock) continue;
      if (f.family == Chamber::A || v > tol) ++dim;
    }
    offset += f.size;
  }
  return dim;
}

} // namespace conesum
