#include "sapkit/laurent.hpp"

#include <sstream>

#include "sapkit/common.hpp"

namespace sapkit {

void LaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

int LaurentPoly::minDeg() const {
  if (coeffs_.empty()) throw Error("minDeg of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::maxDeg() const {
  if (coeffs_.empty()) throw Error("maxDeg of zero polynomial");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e + d] = c;
  return r;
}

namespace {

// Shared term formatter: prints c*name^e with zero-exponent parts dropped.
void appendTerm(std::ostringstream& out, bool first, const mpz_class& c, const std::string& body) {
  mpz_class a = c < 0 ? mpz_class(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (body.empty()) {
    out << a.get_str();
  } else {
    out << a.get_str() << "*" << body;
  }
}

std::string powStr(const std::string& var, int e) {
  if (e == 0) return "";
  std::ostringstream s;
  s << var << "^" << e;
  return s.str();
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : coeffs_) {
    appendTerm(out, first, c, powStr(var, e));
    first = false;
  }
  return out.str();
}

void LaurentPoly2::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
  r.trim();
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
  r.trim();
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_)
      r.coeffs_[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  r.trim();
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int dv, int dz) const {
  LaurentPoly2 r;
  for (auto& [e, c] : coeffs_) r.coeffs_[{e.first + dv, e.second + dz}] = c;
  return r;
}

LaurentPoly LaurentPoly2::coeffOfFirst(int ev) const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_)
    if (e.first == ev) r.coeffs_[e.second] = c;
  return r;
}

int LaurentPoly2::minDegFirst() const {
  if (coeffs_.empty()) throw Error("degree of zero polynomial");
  int m = coeffs_.begin()->first.first;
  for (auto& [e, c] : coeffs_) m = std::min(m, e.first);
  return m;
}

int LaurentPoly2::maxDegFirst() const {
  if (coeffs_.empty()) throw Error("degree of zero polynomial");
  int m = coeffs_.begin()->first.first;
  for (auto& [e, c] : coeffs_) m = std::max(m, e.first);
  return m;
}

int LaurentPoly2::minDegSecond() const {
  if (coeffs_.empty()) throw Error("degree of zero polynomial");
  int m = coeffs_.begin()->first.second;
  for (auto& [e, c] : coeffs_) m = std::min(m, e.second);
  return m;
}

int LaurentPoly2::maxDegSecond() const {
  if (coeffs_.empty()) throw Error("degree of zero polynomial");
  int m = coeffs_.begin()->first.second;
  for (auto& [e, c] : coeffs_) m = std::max(m, e.second);
  return m;
}

LaurentPoly LaurentPoly2::atFirstOne() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e.second] += c;
  LaurentPoly out;
  for (auto& [e, c] : r.coeffs_)
    if (c != 0) out.coeffs_[e] = c;
  return out;
}

namespace {

// (x - x^-1)^n expanded exactly.
LaurentPoly xMinusXInvPow(int n) {
  static std::vector<LaurentPoly> cache;
  if (cache.empty()) {
    cache.push_back(LaurentPoly(1));
    LaurentPoly base = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    cache.push_back(base);
  }
  while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * cache[1]);
  return cache[n];
}

// (t^{1/2} - t^{-1/2})^n in half-integer exponents.
LaurentPoly halfDiffPow(int n) {
  static std::vector<LaurentPoly> cache;
  if (cache.empty()) {
    cache.push_back(LaurentPoly(1));
    LaurentPoly base = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    cache.push_back(base);
  }
  while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * cache[1]);
  return cache[n];
}

}  // namespace

LaurentPoly LaurentPoly2::substituteSecondXMinusXInv() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) {
    if (e.second < 0) throw Error("negative z-exponent in substitution");
    r += xMinusXInvPow(e.second).shifted(e.first) * LaurentPoly::monomial(c, 0);
  }
  return r;
}

LaurentPoly LaurentPoly2::jonesSpecialization() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) {
    if (e.second < 0) throw Error("negative z-exponent in Jones specialization");
    // v^a -> t^a: exponent 2a in half-units; z^b -> (t^{1/2}-t^{-1/2})^b.
    r += halfDiffPow(e.second).shifted(2 * e.first) * LaurentPoly::monomial(c, 0);
  }
  return r;
}

std::string LaurentPoly2::str(const std::string& var1, const std::string& var2) const {
  if (coeffs_.empty()) return "0";
  // Terms sorted by first-variable degree descending, then z ascending, to
  // match the documented text form, e.g. "-1*v^4 + 2*v^2 + 1*v^2*z^2".
  std::vector<std::pair<Key, mpz_class>> ts(coeffs_.begin(), coeffs_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : ts) {
    std::string body = powStr(var1, e.first);
    std::string z = powStr(var2, e.second);
    if (!body.empty() && !z.empty())
      body += "*" + z;
    else if (body.empty())
      body = z;
    appendTerm(out, first, c, body);
    first = false;
  }
  return out.str();
}

}  // namespace sapkit
