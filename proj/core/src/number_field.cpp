#include "curvelab/number_field.hpp"

#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"

namespace curvelab {

NumberField::NumberField(QPoly min_poly) : min_poly_(std::move(min_poly)) {
  const int n = degree();
  // t^n = -(m_0 + ... + m_{n-1} t^{n-1}); higher powers follow by shifting.
  std::vector<Rational> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = -min_poly_.c[i];
  for (int k = n; k <= 2 * n - 2; ++k) {
    reductions_.push_back(cur);
    std::vector<Rational> next(n);
    const Rational top = cur[n - 1];
    for (int i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = Rational();
    if (!top.is_zero()) {
      for (int i = 0; i < n; ++i) next[i] -= top * min_poly_.c[i];
    }
    cur = std::move(next);
  }
}

FieldPtr NumberField::make_unchecked(const QPoly& min_poly) {
  if (min_poly.degree() < 1) fail(ErrorCode::InvalidArgument, "minimal polynomial must be nonconstant");
  QPoly m = min_poly.monic();
  if (m.degree() == 1) return nullptr;
  return FieldPtr(new NumberField(std::move(m)));
}

FieldPtr NumberField::make(const QPoly& min_poly) {
  if (min_poly.degree() < 1) fail(ErrorCode::InvalidArgument, "minimal polynomial must be nonconstant");
  auto factors = factor_rational(min_poly);
  if (factors.size() != 1 || factors[0].multiplicity != 1)
    fail(ErrorCode::InvalidArgument, "minimal polynomial " + min_poly.str() + " is reducible over Q");
  return make_unchecked(min_poly);
}

int field_degree(const FieldPtr& field) noexcept { return field ? field->degree() : 1; }

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->min_poly() == b->min_poly();
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (same_field(a, b)) return a;
  fail(ErrorCode::ExtensionLimit,
       "arithmetic mixes Q(a) with a=" + a->describe() + " and " + b->describe());
}

FieldPtr common_field(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational()) return b.field();
  if (b.is_rational()) return a.field();
  return common_field(a.field(), b.field());
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  const std::size_t n = static_cast<std::size_t>(field_degree(field_));
  if (coords_.size() > n) {
    // Accept any polynomial in a and reduce it.
    QPoly p(coords_);
    if (field_) p = divrem(p, field_->min_poly()).second;
    coords_ = p.c;
  }
  coords_.resize(n);
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (!field) fail(ErrorCode::InvalidArgument, "Q has no generator");
  std::vector<Rational> c(field->degree());
  c[1] = Rational(1);
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const noexcept {
  for (const auto& r : coords_)
    if (!r.is_zero()) return false;
  return true;
}

bool FieldElement::is_rational() const noexcept {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

bool FieldElement::is_one() const noexcept { return is_rational() && coords_[0].is_one(); }

Rational FieldElement::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "field element " + str() + " is not rational");
  return coords_[0];
}

FieldElement FieldElement::canonical() const {
  if (field_ && is_rational()) return FieldElement(coords_[0]);
  return *this;
}

void FieldElement::promote_to(const FieldPtr& field) {
  if (same_field(field_, field)) {
    field_ = field;
    return;
  }
  // Only rational values can move between fields.
  Rational r = coords_[0];
  field_ = field;
  coords_.assign(static_cast<std::size_t>(field_degree(field)), Rational());
  coords_[0] = r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (!field_ && !o.field_) {
    coords_[0] += o.coords_[0];
    return *this;
  }
  FieldPtr f = common_field(*this, o);
  promote_to(f);
  if (same_field(o.field_, f)) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  } else {
    coords_[0] += o.coords_[0];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (!field_ && !o.field_) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  if (o.is_rational()) {
    const Rational s = o.coords_[0];
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  FieldPtr f = common_field(field_, o.field_);
  const int n = f->degree();
  std::vector<Rational> prod(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    if (coords_[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (o.coords_[j].is_zero()) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + n);
  for (int k = n; k <= 2 * n - 2; ++k) {
    if (prod[k].is_zero()) continue;
    const auto& red = f->power_reduction(k);
    for (int i = 0; i < n; ++i) out[i] += prod[k] * red[i];
  }
  field_ = f;
  coords_ = std::move(out);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero field element");
  if (is_rational()) return FieldElement(field_, {coords_[0].inverse()});
  // s*c + t*m = 1 gives c^{-1} = s mod m.
  auto eg = extended_gcd(QPoly(coords_), field_->min_poly());
  return FieldElement(field_, eg.s.c);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement base = *this, result = FieldElement(Rational(1));
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
  if (a.is_rational() != b.is_rational()) return false;
  if (!same_field(a.field_, b.field_)) return false;
  return a.coords_ == b.coords_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  const int da = a.is_rational() ? 1 : field_degree(a.field_);
  const int db = b.is_rational() ? 1 : field_degree(b.field_);
  if (da != db) return da < db;
  if (da > 1 && !same_field(a.field_, b.field_)) return a.field_->describe() < b.field_->describe();
  for (int i = da - 1; i >= 0; --i) {
    if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
  }
  return false;
}

std::string FieldElement::str() const {
  if (is_rational()) return coords_[0].str();
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    std::string c = coords_[i].str();
    if (!first) {
      if (c[0] == '-') {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    first = false;
    if (i == 0) {
      out += c;
    } else {
      if (c != "1" && c != "-1") out += c + "*";
      else if (c == "-1") out += "-";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out + ")";
}

}  // namespace curvelab
