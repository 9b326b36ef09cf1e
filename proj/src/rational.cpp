#include "conesum/rational.hpp"

#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace conesum {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(q_);
  mpz_set_si(mpq_numref(q_), num);
  mpz_set_si(mpq_denref(q_), den);
  if (den < 0) {
    mpz_neg(mpq_numref(q_), mpq_numref(q_));
    mpz_neg(mpq_denref(q_), mpq_denref(q_));
  }
  mpq_canonicalize(q_);
}

Rational::Rational(const std::string& s) {
  mpq_init(q_);
  if (s.empty() || mpq_set_str(q_, s.c_str(), 10) != 0) {
    mpq_clear(q_);
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) == 0) {
    mpq_clear(q_);
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) < 0) {
    mpz_neg(mpq_numref(q_), mpq_numref(q_));
    mpz_neg(mpq_denref(q_), mpq_denref(q_));
  }
  mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

std::string Rational::toString() const {
  char* c = mpq_get_str(nullptr, 10, q_);
  std::string s(c);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(c, s.size() + 1);
  return s;
}

std::string Rational::numeratorString() const {
  char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string s(c);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(c, s.size() + 1);
  return s;
}

std::string Rational::denominatorString() const {
  char* c = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string s(c);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(c, s.size() + 1);
  return s;
}

Rational Rational::pow(unsigned e) const {
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
  // canonical inputs stay canonical under coordinate-wise powers
  return r;
}

Rational Rational::fromDouble(double d) {
  if (!std::isfinite(d))
    throw std::invalid_argument("Rational::fromDouble: non-finite input");
  Rational r;
  mpq_set_d(r.q_, d);
  return r;
}

Rational Rational::factorial(unsigned n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::scoped_lock lock(mu);
  while (cache.size() <= n)
    cache.push_back(cache.back() * Rational(static_cast<std::int64_t>(cache.size())));
  return cache[n];
}

Rational Rational::binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Rational r;
  mpz_bin_uiui(mpq_numref(r.q_), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational Rational::risingFactorial(const Rational& r, unsigned m) {
  Rational acc(1);
  Rational term(r);
  for (unsigned i = 0; i < m; ++i) {
    acc *= term;
    term += Rational(1);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.toString();
}

} // namespace conesum
