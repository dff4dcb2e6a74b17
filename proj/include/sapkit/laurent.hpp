#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sapkit {

// Exact integer Laurent polynomial in one variable. Exponents may be
// negative; for Jones polynomials exponents are measured in half-units
// (exponent 2 == t^1), see JonesPoly below.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) {
    if (c != 0) coeffs_[0] = c;
  }
  static LaurentPoly monomial(const mpz_class& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }

  bool isZero() const { return coeffs_.empty(); }
  bool isOne() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1; }

  const std::map<int, mpz_class>& terms() const { return coeffs_; }

  mpz_class coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
  }

  int minDeg() const;  // throws on zero polynomial
  int maxDeg() const;

  bool nonNegative() const {
    for (auto& [e, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(int d) const;  // multiply by x^d

  // Sum of coefficients, i.e. evaluation at 1.
  mpz_class evalAtOne() const {
    mpz_class s = 0;
    for (auto& [e, c] : coeffs_) s += c;
    return s;
  }

  // Text form: "1 + 1*z^2"; terms in ascending exponent, "-" folded into the
  // separator. Variable name supplied by the caller.
  std::string str(const std::string& var) const;

 private:
  std::map<int, mpz_class> coeffs_;
  void trim();
  friend class LaurentPoly2;
};

// Exact integer Laurent polynomial in two variables (v,z) or (a,z).
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;  // (deg in v/a, deg in z)

  LaurentPoly2() = default;
  explicit LaurentPoly2(long c) {
    if (c != 0) coeffs_[{0, 0}] = c;
  }
  static LaurentPoly2 monomial(const mpz_class& c, int ev, int ez) {
    LaurentPoly2 p;
    if (c != 0) p.coeffs_[{ev, ez}] = c;
    return p;
  }

  bool isZero() const { return coeffs_.empty(); }
  bool isOne() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == Key{0, 0} && coeffs_.begin()->second == 1;
  }

  const std::map<Key, mpz_class>& terms() const { return coeffs_; }

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2& operator+=(const LaurentPoly2& o) { return *this = *this + o; }
  bool operator==(const LaurentPoly2& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

  LaurentPoly2 shifted(int dv, int dz) const;

  // Coefficient extraction P(z; i): the z-polynomial multiplying v^i.
  LaurentPoly coeffOfFirst(int ev) const;

  int minDegFirst() const;  // min degree in v/a
  int maxDegFirst() const;
  int minDegSecond() const;  // min degree in z
  int maxDegSecond() const;

  // Specialization v -> 1 (coefficient-wise collapse onto z).
  LaurentPoly atFirstOne() const;

  // Substitute z -> (x - x^-1) and multiply through; the first variable is
  // renamed to x. Returns a one-variable Laurent polynomial; used for the
  // HOMFLY normalization identity P(v, v - v^-1) and Seifert determinants.
  LaurentPoly substituteSecondXMinusXInv() const;

  // Jones specialization: v -> t, z -> t^{1/2} - t^{-1/2}. Returned
  // polynomial is in half-integer exponents of t (exponent n == t^{n/2}).
  LaurentPoly jonesSpecialization() const;

  std::string str(const std::string& var1, const std::string& var2) const;

 private:
  std::map<Key, mpz_class> coeffs_;
  void trim();
};

}  // namespace sapkit
