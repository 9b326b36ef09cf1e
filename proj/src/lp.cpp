#include "conesum/lp.hpp"

#include <cmath>
#include <stdexcept>

namespace conesum {

ConeSystem coneSystemFromSpec(const ConeSpec& spec) {
  ConeSystem sys;
  sys.dim = spec.ambientDim();
  unsigned offset = 0;
  auto row = [&](unsigned dim) { return std::vector<double>(dim, 0.0); };
  for (const auto& f : spec.factors()) {
    // chain x_i >= x_{i+1} as (x_{i+1} - x_i) <= 0
    for (unsigned i = 0; i + 1 < f.size; ++i) {
      auto r = row(sys.dim);
      r[offset + i] = -1.0;
      r[offset + i + 1] = 1.0;
      sys.ineqs.push_back(std::move(r));
    }
    if (f.family == Chamber::B && f.size >= 1) {
      auto r = row(sys.dim); // x_last >= 0
      r[offset + f.size - 1] = -1.0;
      sys.ineqs.push_back(std::move(r));
    }
    offset += f.size;
  }
  return sys;
}

LpStatus lpFeasible(unsigned dim, const std::vector<std::vector<double>>& ineqRows,
                    const std::vector<std::vector<double>>& eqRows,
                    const std::vector<double>& eqRhs, double tol, int maxIters) {
  if (eqRows.size() != eqRhs.size())
    throw std::invalid_argument("lpFeasible: eq size mismatch");
  const std::size_t m = ineqRows.size() + eqRows.size();
  const std::size_t nSplit = 2 * dim;             // v = v+ - v-
  const std::size_t nSlack = ineqRows.size();     // one slack per inequality
  const std::size_t nCols = nSplit + nSlack + m;  // + artificials
  if (m == 0) return LpStatus::Feasible;

  // tableau rows [A | b], artificial basis, phase-I costs
  std::vector<std::vector<double>> T(m, std::vector<double>(nCols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  std::size_t r = 0;
  auto fillRow = [&](const std::vector<double>& a, double rhs) {
    const double sign = rhs < 0.0 ? -1.0 : 1.0;
    for (unsigned c = 0; c < dim; ++c) {
      T[r][c] = sign * a[c];
      T[r][dim + c] = -sign * a[c];
    }
    T[r][nCols] = sign * rhs;
    return sign;
  };
  for (std::size_t i = 0; i < ineqRows.size(); ++i, ++r) {
    const double sign = fillRow(ineqRows[i], 0.0);
    T[r][nSplit + i] = sign; // slack
    T[r][nSplit + nSlack + r] = 1.0;
    basis[r] = nSplit + nSlack + r;
  }
  for (std::size_t i = 0; i < eqRows.size(); ++i, ++r) {
    fillRow(eqRows[i], eqRhs[i]);
    T[r][nSplit + nSlack + r] = 1.0;
    basis[r] = nSplit + nSlack + r;
  }

  auto isArtificial = [&](std::size_t col) { return col >= nSplit + nSlack; };

  for (int iter = 0; iter < maxIters; ++iter) {
    // reduced costs of the phase-I objective (artificials cost 1)
    std::size_t entering = nCols;
    for (std::size_t j = 0; j < nCols && entering == nCols; ++j) {
      if (isArtificial(j)) continue;
      double z = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        if (isArtificial(basis[i])) z += T[i][j];
      if (z > tol) entering = j; // Bland: first improving column
    }
    if (entering == nCols) {
      double objective = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        if (isArtificial(basis[i])) objective += T[i][nCols];
      return objective <= tol ? LpStatus::Feasible : LpStatus::Infeasible;
    }
    // ratio test, Bland tie-break on smallest basis index
    std::size_t leaving = m;
    double bestRatio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][entering] <= tol) continue;
      const double ratio = T[i][nCols] / T[i][entering];
      if (leaving == m || ratio < bestRatio - tol ||
          (std::fabs(ratio - bestRatio) <= tol && basis[i] < basis[leaving])) {
        leaving = i;
        bestRatio = ratio;
      }
    }
    // phase-I objective is bounded below by 0; an unbounded ray is numeric
    // trouble, never a verdict
    if (leaving == m) return LpStatus::Inconclusive;
    // pivot
    const double piv = T[leaving][entering];
    for (double& v : T[leaving]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leaving) continue;
      const double factor = T[i][entering];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= nCols; ++j) T[i][j] -= factor * T[leaving][j];
    }
    basis[leaving] = entering;
  }
  return LpStatus::Inconclusive;
}

KernelResult coneKernelIntersects(const ConeSystem& cone,
                                  const std::vector<std::vector<double>>& G,
                                  RngStream& probe, double tol) {
  std::vector<std::vector<double>> eqRows = cone.eqs;
  std::vector<double> eqRhs(eqRows.size(), 0.0);
  for (const auto& row : G) {
    if (row.size() != cone.dim)
      throw std::invalid_argument("coneKernelIntersects: G column mismatch");
    eqRows.push_back(row);
    eqRhs.push_back(0.0);
  }
  std::vector<double> w(cone.dim);
  for (auto& v : w) v = probe.nextGaussian();
  eqRows.push_back(w);
  eqRhs.push_back(1.0);

  const LpStatus plus = lpFeasible(cone.dim, cone.ineqs, eqRows, eqRhs, tol);
  if (plus == LpStatus::Feasible) return KernelResult::Intersects;
  eqRhs.back() = -1.0;
  const LpStatus minus = lpFeasible(cone.dim, cone.ineqs, eqRows, eqRhs, tol);
  if (minus == LpStatus::Feasible) return KernelResult::Intersects;
  if (plus == LpStatus::Infeasible && minus == LpStatus::Infeasible)
    return KernelResult::TrivialOnly;
  return KernelResult::Inconclusive;
}

} // namespace conesum
