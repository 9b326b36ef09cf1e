#include "conesum/tpoly.hpp"

#include <ostream>
#include <stdexcept>

namespace conesum {

namespace {
const Rational kZero(0);
}

TPoly::TPoly(Rational constant) {
  if (!constant.isZero()) coeffs_.push_back(std::move(constant));
}

TPoly::TPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

TPoly::TPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::variable() { return TPoly({Rational(0), Rational(1)}); }

const Rational& TPoly::coeff(unsigned k) const {
  if (k >= coeffs_.size()) return kZero;
  return coeffs_[k];
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const Rational& s) {
  if (s.isZero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TPoly& TPoly::operator/=(const Rational& s) {
  if (s.isZero()) throw std::domain_error("TPoly: division by zero");
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Rational TPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

TPoly TPoly::risingFactorial(const TPoly& s, unsigned m) {
  TPoly acc(Rational(1));
  TPoly term(s);
  for (unsigned i = 0; i < m; ++i) {
    acc *= term;
    term += TPoly(Rational(1));
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) {
  if (p.isZero()) return os << "0";
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).isZero()) continue;
    if (k > 0) os << " + ";
    os << p.coeff(k);
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
  }
  return os;
}

} // namespace conesum
