#pragma once

#include <gmpxx.h>

#include <vector>

#include "sapkit/common.hpp"

namespace sapkit {

// Rational polynomial arithmetic modulo the q-th cyclotomic polynomial.
// Elements represent values at the specific root omega = exp(2*pi*i*p/q);
// sign queries for real elements are answered by certified rational interval
// evaluation at that root, with exact zero-testing done symbolically first.
class CyclotomicField {
 public:
  CyclotomicField(int p, int q);  // omega = exp(2 pi i p / q), 0 < p < q, gcd 1

  int p() const { return p_; }
  int q() const { return q_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  using Elem = std::vector<mpq_class>;  // coefficients, size == degree()

  Elem zero() const { return Elem(degree(), 0); }
  Elem fromRational(const mpq_class& r) const;
  Elem omegaPower(int k) const;  // omega^k reduced

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem conj(const Elem& a) const;  // omega -> omega^{-1}
  Elem inverse(const Elem& a) const;
  bool isZero(const Elem& a) const;

  // Sign of a real element (a == conj(a)); throws NonCertifiable only if the
  // configured precision ceiling is reached, which certified refinement makes
  // unreachable for nonzero values in practice.
  int signReal(const Elem& a) const;

 private:
  int p_, q_;
  std::vector<mpq_class> phi_;  // cyclotomic polynomial, monic, degree phi(q)

  void reduce(std::vector<mpq_class>& poly) const;
  // Certified interval evaluation of sum a_k cos(2 pi k p / q): returns
  // (lo, hi) enclosures with the requested number of working bits.
  std::pair<mpq_class, mpq_class> realEnclosure(const Elem& a, int bits) const;
};

// Cyclotomic polynomial Phi_q as integer coefficients.
std::vector<mpz_class> cyclotomicPolynomial(int q);

}  // namespace sapkit
