#include "curvelab/upoly.hpp"

#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"

namespace curvelab {

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(const Rational& v, int exponent) {
  std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
  c[exponent] = v;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  const Rational inv = lead().inverse();
  for (auto& x : r.c) x *= inv;
  return r;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c[i] * Rational(i));
  return QPoly(std::move(d));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

QPoly QPoly::shifted(const Rational& shift) const {
  // Horner in the shifted variable.
  QPoly acc;
  const QPoly lin({shift, Rational(1)});
  for (int i = degree(); i >= 0; --i) acc = acc * lin + QPoly::constant(c[i]);
  return acc;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c[i].is_zero()) continue;
    std::string s = c[i].str();
    bool neg = s[0] == '-';
    if (neg) s = s.substr(1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0) {
      out += s;
    } else {
      if (s != "1") out += s + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const Rational& s) {
  QPoly r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem = a.c;
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = b.lead().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const Rational f = rem[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.degree() > 2 && b.degree() > 2) {
    if (detail::coprime_certificate(a, b)) return QPoly::constant(1);
    if (std::max(a.degree(), b.degree()) > 8) return detail::modular_gcd(a, b);
  }
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

QPoly pow(const QPoly& a, unsigned e) {
  QPoly base = a, result = QPoly::constant(1);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const QPoly& p) {
  c_.reserve(p.c.size());
  for (const auto& r : p.c) c_.emplace_back(r);
}

UPoly UPoly::linear_root(const FieldElement& root) {
  return UPoly(std::vector<FieldElement>{-root, FieldElement(1)});
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPtr UPoly::field() const {
  FieldPtr f;
  for (const auto& x : c_) {
    if (!x.is_rational()) f = common_field(f, x.field());
  }
  return f;
}

bool UPoly::is_rational() const {
  for (const auto& x : c_)
    if (!x.is_rational()) return false;
  return true;
}

QPoly UPoly::to_qpoly() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x.rational_value());
  return QPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElement inv = lead().inverse();
  UPoly r = *this;
  for (auto& x : r.c_) x *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<FieldElement> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * FieldElement(i));
  return UPoly(std::move(d));
}

FieldElement UPoly::eval(const FieldElement& x) const {
  FieldElement acc;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::shifted(const FieldElement& shift) const {
  UPoly acc;
  const UPoly lin(std::vector<FieldElement>{shift, FieldElement(1)});
  for (int i = degree(); i >= 0; --i) acc = acc * lin + UPoly::constant(c_[i]);
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].str();
    if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const FieldElement& s) {
  std::vector<FieldElement> r = a.c_;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const FieldElement inv = b.lead().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const FieldElement f = rem[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_rational() && b.is_rational()) return UPoly(gcd(a.to_qpoly(), b.to_qpoly()));
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly pow(const UPoly& a, unsigned e) {
  UPoly base = a, result = UPoly::constant(1);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace curvelab
