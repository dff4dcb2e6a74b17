#include "sapkit/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace sapkit {

namespace {

// Polynomial division of integer polynomials (exact when divisible).
std::vector<mpz_class> polyDivExact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  std::vector<mpz_class> quo(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
    mpz_class c = num[i + den.size() - 1] / den.back();
    quo[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return quo;
}

}  // namespace

std::vector<mpz_class> cyclotomicPolynomial(int q) {
  // Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d
  std::vector<mpz_class> num(q + 1, 0);
  num[0] = -1;
  num[q] = 1;
  for (int d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    std::vector<mpz_class> phid = cyclotomicPolynomial(d);
    num = polyDivExact(num, phid);
  }
  return num;
}

CyclotomicField::CyclotomicField(int p, int q) : p_(p), q_(q) {
  if (q < 2 || p <= 0 || p >= q || std::gcd(p, q) != 1)
    throw Error("omega must be a primitive q-th root with 0 < p < q");
  std::vector<mpz_class> phi = cyclotomicPolynomial(q);
  phi_.assign(phi.begin(), phi.end());
}

void CyclotomicField::reduce(std::vector<mpq_class>& poly) const {
  int deg = degree();
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    mpq_class c = poly[i];
    if (c == 0) continue;
    // x^i = x^{i-deg} * (x^deg) and x^deg = -(phi minus leading term)
    for (int j = 0; j < deg; ++j) poly[i - deg + j] -= c * phi_[j];
    poly[i] = 0;
  }
  poly.resize(deg);
}

CyclotomicField::Elem CyclotomicField::fromRational(const mpq_class& r) const {
  Elem e = zero();
  e[0] = r;
  return e;
}

CyclotomicField::Elem CyclotomicField::omegaPower(int k) const {
  k %= q_;
  if (k < 0) k += q_;
  std::vector<mpq_class> poly(k + 1, 0);
  poly[k] = 1;
  reduce(poly);
  return poly;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < degree(); ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < degree(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r) c = -c;
  return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  std::vector<mpq_class> prod(2 * degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  reduce(prod);
  return prod;
}

CyclotomicField::Elem CyclotomicField::conj(const Elem& a) const {
  // omega -> omega^{q-1}
  Elem r = zero();
  for (int i = 0; i < degree(); ++i) {
    if (a[i] == 0) continue;
    Elem term = omegaPower((q_ - 1) * i);
    for (int j = 0; j < degree(); ++j) r[j] += a[i] * term[j];
  }
  return r;
}

bool CyclotomicField::isZero(const Elem& a) const {
  for (auto& c : a)
    if (c != 0) return false;
  return true;
}

CyclotomicField::Elem CyclotomicField::inverse(const Elem& a) const {
  if (isZero(a)) throw Error("division by zero in cyclotomic field");
  // Extended Euclid in Q[x] against Phi_q.
  std::vector<mpq_class> r0(phi_.begin(), phi_.end());
  std::vector<mpq_class> r1(a.begin(), a.end());
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<mpq_class> s0{0}, s1{1};  // coefficients of `a`
  auto degOf = [](const std::vector<mpq_class>& v) {
    int d = static_cast<int>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  while (degOf(r1) > 0) {
    int d0 = degOf(r0), d1 = degOf(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    mpq_class c = r0[d0] / r1[d1];
    int shift = d0 - d1;
    if (static_cast<int>(r0.size()) < d0 + 1) r0.resize(d0 + 1);
    for (int i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
    if (static_cast<int>(s0.size()) < static_cast<int>(s1.size()) + shift)
      s0.resize(s1.size() + shift, 0);
    for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= c * s1[i];
  }
  int d1 = degOf(r1);
  if (d1 < 0) throw Error("element not invertible (shares a factor with Phi_q)");
  mpq_class unit = r1[0];
  Elem inv = zero();
  for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(degree()); ++i) inv[i] = s1[i] / unit;
  std::vector<mpq_class> check(inv.begin(), inv.end());
  reduce(check);
  return Elem(check.begin(), check.end());
}

namespace {

// Certified enclosure of cos(2 pi k / n) via argument-reduced Taylor series
// with rational arithmetic. `bits` controls the truncation error budget.
struct CosTable {
  // Returns (lo, hi) with lo <= cos(2 pi k / n) <= hi.
  static std::pair<mpq_class, mpq_class> cos2pik(int k, int n, int bits) {
    // High-precision rational enclosure of pi.
    static const mpq_class piLo("3141592653589793238462643383279502884197169399375105820974944592307816406286/"
                                "1000000000000000000000000000000000000000000000000000000000000000000000000000");
    static const mpq_class piHi("3141592653589793238462643383279502884197169399375105820974944592307816406287/"
                                "1000000000000000000000000000000000000000000000000000000000000000000000000000");
    k %= n;
    if (k < 0) k += n;
    // theta = 2 pi k / n in [0, 2pi); reduce symmetrically using exactness of
    // the rational multiple: cos(2pi k/n) = cos(2pi (n-k)/n).
    if (2 * k > n) k = n - k;  // now theta in [0, pi]
    if (k == 0) return {mpq_class(1), mpq_class(1)};
    if (2 * k == n) return {mpq_class(-1), mpq_class(-1)};
    if (4 * k == n) return {mpq_class(0), mpq_class(0)};
    mpq_class lo = piLo * 2 * k / n, hi = piHi * 2 * k / n;
    // Taylor with interval argument [lo, hi] (0 <= lo <= hi <= pi + eps).
    return cosInterval(lo, hi, bits);
  }

  static std::pair<mpq_class, mpq_class> cosInterval(const mpq_class& lo, const mpq_class& hi,
                                                     int bits) {
    // cos is decreasing on [0, pi]: evaluate endpoints.
    auto [l1, h1] = cosPoint(hi, bits);
    auto [l2, h2] = cosPoint(lo, bits);
    return {l1, h2};
  }

  // Alternating Taylor series with rigorous truncation: for x in [0, ~pi],
  // partial sums bracket cos(x) once terms decrease.
  static std::pair<mpq_class, mpq_class> cosPoint(const mpq_class& x, int bits) {
    mpq_class x2 = x * x;
    mpq_class term = 1, sum = 1;
    mpq_class eps(1, 1);
    for (int i = 0; i < bits; ++i) eps /= 2;
    int n = 0;
    mpq_class low = 0, high = 0;
    while (true) {
      // next term: (-1)^{n+1} x^{2n+2} / (2n+2)!
      term = term * x2 / ((2 * n + 1) * (2 * n + 2));
      ++n;
      if (n % 2 == 1)
        sum -= term;
      else
        sum += term;
      // once |term| decreasing and below eps, bracket
      if (term < eps && x2 < mpq_class(4 * n * n)) {
        low = sum - term;
        high = sum + term;
        break;
      }
      if (n > 200) {
        low = sum - 2;
        high = sum + 2;
        break;
      }
    }
    return {low, high};
  }
};

}  // namespace

std::pair<mpq_class, mpq_class> CyclotomicField::realEnclosure(const Elem& a, int bits) const {
  // Value = sum a_k * omega^k with omega = exp(2 pi i p / q). For a real
  // element the imaginary parts cancel; enclose sum a_k cos(2 pi k p / q).
  mpq_class lo = 0, hi = 0;
  for (int k = 0; k < degree(); ++k) {
    if (a[k] == 0) continue;
    auto [cl, ch] = CosTable::cos2pik(k * p_, q_, bits);
    if (a[k] > 0) {
      lo += a[k] * cl;
      hi += a[k] * ch;
    } else {
      lo += a[k] * ch;
      hi += a[k] * cl;
    }
  }
  return {lo, hi};
}

int CyclotomicField::signReal(const Elem& a) const {
  if (isZero(a)) return 0;
  // Exact zero test on the symmetric part first: a real element equals its
  // conjugate; if a - conj(a) != 0 the element is not real.
  Elem c = conj(a);
  Elem diff = sub(a, c);
  if (!isZero(diff)) throw Error("signReal called on a non-real element");
  for (int bits = 64; bits <= 4096; bits *= 2) {
    auto [lo, hi] = realEnclosure(a, bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw NonCertifiable("interval too wide for sign determination");
}

}  // namespace sapkit
