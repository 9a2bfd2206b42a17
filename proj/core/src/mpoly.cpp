#include "curvelab/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

int exponent_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Total degree first, then lexicographic.
bool graded_less(const Exponent& a, const Exponent& b) {
  const int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da < db;
  return a < b;
}

void require_same_vars(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorCode::DimensionMismatch, "polynomials over " + std::to_string(a.nvars()) + " and " +
                                           std::to_string(b.nvars()) + " variables");
}

std::string power_str(const std::string& var, int e) {
  return e == 1 ? var : var + "^" + std::to_string(e);
}

}  // namespace

MPoly MPoly::constant(std::vector<std::string> vars, const FieldElement& value) {
  const std::size_t n = vars.size();
  return monomial(std::move(vars), Exponent(n, 0), value);
}

MPoly MPoly::variable(std::vector<std::string> vars, int index) {
  Exponent e(vars.size(), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(std::move(vars), std::move(e), FieldElement(1));
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponent e, const FieldElement& value) {
  if (e.size() != vars.size()) fail(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  MPoly p(std::move(vars));
  if (!value.is_zero()) p.terms_.emplace(std::move(e), value.canonical());
  return p;
}

MPoly MPoly::from_univariate(std::vector<std::string> vars, int index, const UPoly& u) {
  MPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  for (int k = 0; k <= u.degree(); ++k) {
    e[index] = k;
    p.add_term(e, u.coeff(k));
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
  return d;
}

int MPoly::order() const {
  if (terms_.empty()) return -1;
  int d = exponent_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, exponent_degree(e));
  return d;
}

int MPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = exponent_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exponent_degree(e) != d) return false;
  return true;
}

FieldElement MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement() : it->second;
}

void MPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars()) fail(ErrorCode::DimensionMismatch, "exponent length mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
    else it->second = it->second.canonical();
  } else {
    it->second = it->second.canonical();
  }
}

FieldPtr MPoly::field() const {
  FieldPtr f;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) f = common_field(f, c.field());
  return f;
}

bool MPoly::is_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

MPoly MPoly::homogeneous_part(int k) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (exponent_degree(e) == k) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * FieldElement(e[var]));
  }
  return r;
}

FieldElement MPoly::eval(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != nvars()) fail(ErrorCode::DimensionMismatch, "evaluation point dimension");
  // Cache powers per variable.
  std::vector<std::vector<FieldElement>> powers(point.size());
  FieldElement acc;
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(FieldElement(1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
      t *= pw[e[i]];
    }
    acc += t;
  }
  return acc.canonical();
}

MPoly MPoly::substitute(int var, const FieldElement& value) const {
  MPoly r(vars_);
  std::vector<FieldElement> pw{FieldElement(1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(pw.size()) <= e[var]) pw.push_back(pw.back() * value);
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * pw[e[var]]);
  }
  return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    fail(ErrorCode::DimensionMismatch, "composition needs one image per variable");
  if (images.empty()) return *this;
  const auto& target_vars = images.front().vars();
  std::vector<std::vector<MPoly>> powers(images.size());
  MPoly r(target_vars);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly::constant(target_vars, FieldElement(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::renamed(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size()) fail(ErrorCode::DimensionMismatch, "rename needs the same variable count");
  MPoly r = *this;
  r.vars_ = std::move(vars);
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(int var) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, MPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

UPoly MPoly::to_univariate(int var) const {
  std::vector<FieldElement> c(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (const auto& [e, v] : terms_) {
    for (int i = 0; i < nvars(); ++i)
      if (i != var && e[i] != 0) fail(ErrorCode::InvalidArgument, "polynomial " + str() + " is not univariate");
    c[e[var]] = v;
  }
  return UPoly(std::move(c));
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return *this;
  auto lead = std::max_element(terms_.begin(), terms_.end(),
                               [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  if (!is_rational()) return *this * lead->second.inverse();
  Integer l = 1, g = 0;
  for (const auto& [e, c] : terms_) {
    const Rational r = c.rational_value();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.num().get_mpz_t());
  }
  Rational scale(l, g);
  if (lead->second.rational_value().sign() < 0) scale = -scale;
  return *this * FieldElement(scale);
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return graded_less(b->first, a->first); });
  std::string out;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += power_str(vars_[i], e[i]);
    }
    std::string coeff = c.str();
    bool neg = false;
    if (c.is_rational() && c.rational_value().sign() < 0) {
      neg = true;
      coeff = (-c).str();
    }
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  MPoly r(a.vars_);
  const std::size_t n = a.vars_.size();
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly operator*(const MPoly& a, const FieldElement& s) {
  MPoly r(a.vars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, (c * s).canonical());
  return r;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly base = p, result = MPoly::constant(p.vars(), FieldElement(1));
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool try_divide(const MPoly& a, const MPoly& b, MPoly& quotient) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "multivariate division by zero");
  require_same_vars(a, b);
  MPoly rem = a;
  MPoly q(a.vars());
  const Exponent& lb = b.lead_exponent();
  const FieldElement inv = b.lead_coeff().inverse();
  while (!rem.is_zero()) {
    const Exponent lr = rem.lead_exponent();
    Exponent d(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) return false;
    }
    const FieldElement f = rem.lead_coeff() * inv;
    MPoly t = MPoly::monomial(a.vars(), d, f);
    q += t;
    rem -= t * b;
  }
  quotient = std::move(q);
  return true;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  MPoly q;
  if (!try_divide(a, b, q)) fail(ErrorCode::InvalidArgument, "(" + b.str() + ") does not divide (" + a.str() + ")");
  return q;
}

}  // namespace curvelab
