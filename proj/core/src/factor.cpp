#include "curvelab/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

// ------------------------------------------------------------ integer polys

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  Integer g = zcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

ZPoly to_zpoly(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  ZPoly z;
  z.reserve(p.c.size());
  for (const auto& c : p.c) z.push_back(c.num() * (l / c.den()));
  return zprimitive(std::move(z));
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

// ------------------------------------------------------------ arithmetic mod p

using FpPoly = std::vector<std::uint64_t>;

void ftrim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int fdeg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod_u(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod_u(a, p - 2, p); }

FpPoly fp_from_z(const ZPoly& z, std::uint64_t p) {
  FpPoly r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
  ftrim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  ftrim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ftrim(r);
  return r;
}

FpPoly fp_scale(const FpPoly& a, std::uint64_t s, std::uint64_t p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  ftrim(r);
  return r;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (fdeg(a) < fdeg(b)) return {FpPoly{}, a};
  FpPoly rem = a;
  FpPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  const int db = fdeg(b);
  for (int k = fdeg(a); k >= db; --k) {
    if (!rem[k]) continue;
    std::uint64_t f = mulmod(rem[k], inv, p);
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = (rem[k - db + j] + p - mulmod(f, b[j], p)) % p;
  }
  ftrim(rem);
  ftrim(q);
  return {q, rem};
}

FpPoly fp_monic(const FpPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return fp_scale(a, invmod(a.back(), p), p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

struct FpExtGcd {
  FpPoly g, s, t;
};

FpExtGcd fp_ext_gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divrem(r0, r1, p);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t inv = invmod(r0.back(), p);
  return {fp_scale(r0, inv, p), fp_scale(s0, inv, p), fp_scale(t0, inv, p)};
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
  FpPoly d;
  for (int i = 1; i <= fdeg(a); ++i) d.push_back(mulmod(a[i], static_cast<std::uint64_t>(i) % p, p));
  ftrim(d);
  return d;
}

FpPoly fp_powmod(const FpPoly& base, const Integer& e, const FpPoly& mod, std::uint64_t p) {
  FpPoly result{1};
  FpPoly b = fp_divrem(base, mod, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_divrem(fp_mul(result, result, p), mod, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_divrem(fp_mul(result, b, p), mod, p).second;
  }
  return result;
}

/// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<FpPoly, int>> fp_ddf(FpPoly f, std::uint64_t p) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly h = x;
  int i = 1;
  while (fdeg(f) >= 2 * i) {
    h = fp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
    if (fdeg(g) > 0) {
      out.emplace_back(g, i);
      f = fp_divrem(f, g, p).first;
      h = fp_divrem(h, f, p).second;
    }
    ++i;
  }
  if (fdeg(f) > 0) out.emplace_back(f, fdeg(f));
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting.
void fp_edf(const FpPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (fdeg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(fdeg(g)));
    for (auto& c : a) c = dist(rng);
    ftrim(a);
    if (fdeg(a) < 1) continue;
    FpPoly b = fp_sub(fp_powmod(a, e, g, p), FpPoly{1}, p);
    FpPoly h = fp_gcd(b, g, p);
    if (fdeg(h) > 0 && fdeg(h) < fdeg(g)) {
      fp_edf(h, d, p, rng, out);
      fp_edf(fp_divrem(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eedULL ^ p);
  std::vector<FpPoly> out;
  for (auto& [g, d] : fp_ddf(fp_monic(f, p), p)) fp_edf(g, d, p, rng, out);
  return out;
}

// ------------------------------------------------------------ Hensel lifting

ZPoly zmod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(zmul(a, b), m); }

/// Division by a monic divisor modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly rem = zmod(a, m);
  if (zdeg(rem) < zdeg(b)) return {ZPoly{}, rem};
  ZPoly q(rem.size() - b.size() + 1, Integer(0));
  const int db = zdeg(b);
  for (int k = zdeg(rem); k >= db; --k) {
    Integer f;
    mpz_fdiv_r(f.get_mpz_t(), rem[k].get_mpz_t(), m.get_mpz_t());
    if (f == 0) continue;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b[j];
  }
  return {zmod(q, m), zmod(rem, m)};
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

struct HenselState {
  ZPoly g, h, s, t;
};

HenselState hensel_step(const ZPoly& f, const HenselState& st, const Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = zmod(zsub(f, zmul(st.g, st.h)), m2);
  auto [q, r] = zdivrem_monic(zmul(st.s, e), st.h, m2);
  ZPoly g2 = zmod(zadd(zadd(st.g, zmul(st.t, e)), zmul(q, st.g)), m2);
  ZPoly h2 = zmod(zadd(st.h, r), m2);
  ZPoly b = zmod(zsub(zadd(zmul(st.s, g2), zmul(st.t, h2)), ZPoly{Integer(1)}), m2);
  auto [c, d] = zdivrem_monic(zmul(st.s, b), h2, m2);
  ZPoly s2 = zmod(zsub(st.s, d), m2);
  ZPoly t2 = zmod(zsub(zsub(st.t, zmul(st.t, b)), zmul(c, g2)), m2);
  return {g2, h2, s2, t2};
}

/// Lifts f == lc(f) * prod(factors) mod p to monic factors modulo p^(2^steps).
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                                    int steps) {
  Integer modulus = static_cast<unsigned long>(p);
  for (int i = 0; i < steps; ++i) modulus *= modulus;
  if (factors.size() == 1) {
    Integer lc_inv;
    Integer lc;
    mpz_fdiv_r(lc.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= lc_inv;
    return {zmod(r, modulus)};
  }
  const std::size_t k = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(k));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(k), factors.end());
  FpPoly g0{mpz_fdiv_ui(f.back().get_mpz_t(), p)};
  for (const auto& x : left) g0 = fp_mul(g0, x, p);
  FpPoly h0{1};
  for (const auto& x : right) h0 = fp_mul(h0, x, p);
  FpExtGcd eg = fp_ext_gcd(g0, h0, p);
  HenselState st{from_fp(g0), from_fp(h0), from_fp(eg.s), from_fp(eg.t)};
  Integer m = static_cast<unsigned long>(p);
  for (int i = 0; i < steps; ++i) {
    st = hensel_step(zmod(f, m * m), st, m);
    m *= m;
  }
  auto lg = multifactor_lift(st.g, left, p, steps);
  auto lh = multifactor_lift(st.h, right, p, steps);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

ZPoly symmetric_mod(const ZPoly& a, const Integer& m) {
  ZPoly r = zmod(a, m);
  const Integer half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  ztrim(r);
  return r;
}

Integer l1_norm(const ZPoly& a) {
  Integer s = 0;
  for (const auto& c : a) s += abs(c);
  return s;
}

/// Zassenhaus for a primitive square-free integer polynomial with lc > 0.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = zdeg(f);
  if (n <= 1) return {f};

  // Pick the prime (among a few candidates) giving the fewest modular factors.
  std::uint64_t best_p = 0;
  std::vector<FpPoly> best;
  Integer cand = 1009;
  int tried = 0;
  while (tried < 4) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    const std::uint64_t p = cand.get_ui();
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    FpPoly fp = fp_from_z(f, p);
    if (fdeg(fp_gcd(fp, fp_derivative(fp, p), p)) > 0) continue;
    auto fac = fp_factor_squarefree(fp, p);
    ++tried;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
  root += 1;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  const Integer bound = root * pow2 * maxc * abs(f.back());

  int steps = 0;
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted = multifactor_lift(f, best, best_p, steps);

  std::vector<ZPoly> result;
  ZPoly fcur = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{fcur.back()}, h{fcur.back()};
      std::vector<bool> in(r, false);
      for (auto i : idx) in[i] = true;
      for (std::size_t i = 0; i < r; ++i) {
        if (in[i]) g = zmulmod(g, lifted[i], modulus);
        else h = zmulmod(h, lifted[i], modulus);
      }
      g = symmetric_mod(g, modulus);
      h = symmetric_mod(h, modulus);
      if (l1_norm(g) * l1_norm(h) <= bound) {
        result.push_back(zprimitive(g));
        fcur = zprimitive(h);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < r; ++i)
          if (!in[i]) rest.push_back(lifted[i]);
        lifted = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == r - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  result.push_back(fcur);
  return result;
}

}  // namespace

namespace detail {

QPoly modular_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const ZPoly za = to_zpoly(a), zb = to_zpoly(b);
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());
  const QPoly qa = to_qpoly(za), qb = to_qpoly(zb);
  Integer cand = 2147483647;  // primes just above 2^31 keep products inside 64 bits
  ZPoly h;
  Integer modulus = 0;
  int h_deg = -1;
  ZPoly last;
  for (;;) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    const std::uint64_t p = cand.get_ui();
    if (mpz_fdiv_ui(gamma.get_mpz_t(), p) == 0) continue;
    FpPoly g = fp_gcd(fp_from_z(za, p), fp_from_z(zb, p), p);
    if (fdeg(g) == 0) return QPoly::constant(1);
    g = fp_scale(g, mpz_fdiv_ui(gamma.get_mpz_t(), p), p);
    if (h_deg < 0 || fdeg(g) < h_deg) {
      h = from_fp(g);
      modulus = static_cast<unsigned long>(p);
      h_deg = fdeg(g);
      last.clear();
      continue;
    }
    if (fdeg(g) > h_deg) continue;
    // Chinese remaindering, coefficient by coefficient.
    Integer minv;
    Integer pz = static_cast<unsigned long>(p);
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    h.resize(static_cast<std::size_t>(h_deg) + 1, Integer(0));
    for (int i = 0; i <= h_deg; ++i) {
      const Integer gi = i < static_cast<int>(g.size()) ? Integer(static_cast<unsigned long>(g[i])) : Integer(0);
      Integer diff = gi - h[i];
      Integer t = diff * minv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      h[i] += modulus * t;
    }
    modulus *= pz;
    ZPoly cand_poly = zprimitive(symmetric_mod(h, modulus));
    if (cand_poly == last) {
      const QPoly g_q = to_qpoly(cand_poly);
      if (divrem(qa, g_q).second.is_zero() && divrem(qb, g_q).second.is_zero()) return g_q.monic();
    }
    last = std::move(cand_poly);
  }
}

bool coprime_certificate(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.degree() == 0 || b.degree() == 0) return true;
  ZPoly za = to_zpoly(a), zb = to_zpoly(b);
  Integer cand = 1000003;
  for (int attempt = 0; attempt < 3; ++attempt) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    const std::uint64_t p = cand.get_ui();
    if (mpz_fdiv_ui(za.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(zb.back().get_mpz_t(), p) == 0) continue;
    if (fdeg(fp_gcd(fp_from_z(za, p), fp_from_z(zb, p), p)) == 0) return true;
  }
  return false;
}

}  // namespace detail

std::vector<QFactor> squarefree_decomposition(const QPoly& p) {
  std::vector<QFactor> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm.
  QPoly f = p.monic();
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = divrem(f, a).first;
  QPoly c = divrem(fp, a).first;
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a.monic(), i});
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<KFactor> squarefree_decomposition(const UPoly& p) {
  std::vector<KFactor> out;
  if (p.degree() < 1) return out;
  if (p.is_rational()) {
    for (auto& f : squarefree_decomposition(p.to_qpoly())) out.push_back({UPoly(f.factor), f.multiplicity});
    return out;
  }
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = divrem(f, a).first;
  UPoly c = divrem(fp, a).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a.monic(), i});
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<QFactor> factor_rational(const QPoly& p) {
  std::vector<QFactor> out;
  for (const auto& sq : squarefree_decomposition(p)) {
    QPoly part = sq.factor;
    // Split off powers of t before the modular machinery.
    int zeros = 0;
    while (part.degree() > 0 && part.c[0].is_zero()) {
      part.c.erase(part.c.begin());
      ++zeros;
    }
    if (zeros > 0) out.push_back({QPoly({Rational(0), Rational(1)}), sq.multiplicity});
    if (part.degree() < 1) continue;
    for (const auto& z : zassenhaus(to_zpoly(part))) out.push_back({to_qpoly(z).monic(), sq.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return std::lexicographical_compare(a.factor.c.rbegin(), a.factor.c.rend(), b.factor.c.rbegin(),
                                        b.factor.c.rend());
  });
  return out;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  QPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * QPoly({-xs[k], Rational(1)}) + QPoly::constant(dd[k]);
  }
  return acc;
}

Rational field_norm(const FieldElement& x) {
  if (x.is_rational() || !x.field()) return x.rational_value().pow(static_cast<unsigned>(field_degree(x.field())));
  const FieldPtr& k = x.field();
  const int n = k->degree();
  // Column j of the multiplication matrix is x * a^j.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  FieldElement basis(Rational(1));
  const FieldElement a = FieldElement::generator(k);
  for (int j = 0; j < n; ++j) {
    FieldElement col = x * basis;
    std::vector<Rational> cc = col.coords();
    cc.resize(n);
    for (int i = 0; i < n; ++i) m[i][j] = cc[i];
    basis *= a;
  }
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

namespace {

/// Norm of q(t) in Q[t] via interpolation of Norm(q(t0)).
QPoly polynomial_norm(const UPoly& q, const FieldPtr& k) {
  const int deg = q.degree() * k->degree();
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= deg; ++i) {
    Rational t0(i - deg / 2);
    xs.push_back(t0);
    FieldElement v = q.eval(FieldElement(t0));
    ys.push_back(field_norm(FieldElement(k, v.coords())));
  }
  return interpolate(xs, ys);
}

std::vector<UPoly> factor_squarefree_over_extension(const UPoly& q, const FieldPtr& k) {
  if (q.degree() <= 1) return {q.monic()};
  const FieldElement a = FieldElement::generator(k);
  for (int s = 0; s < 64; ++s) {
    const int shift = (s % 2 == 0) ? s / 2 : -(s + 1) / 2;
    // q_s(t) = q(t - shift*a)
    const UPoly qs = q.shifted(a * FieldElement(-shift));
    QPoly norm = polynomial_norm(qs, k);
    if (gcd(norm, norm.derivative()).degree() > 0) continue;
    std::vector<UPoly> out;
    for (const auto& nf : factor_rational(norm)) {
      UPoly g = gcd(qs, UPoly(nf.factor));
      if (g.degree() < 1) continue;
      out.push_back(g.shifted(a * FieldElement(shift)).monic());
    }
    return out;
  }
  fail(ErrorCode::ExtensionLimit, "no square-free norm found while factoring " + q.str());
}

}  // namespace

std::vector<KFactor> factor_univariate(const UPoly& p) { return factor_univariate(p, p.field()); }

std::vector<KFactor> factor_univariate(const UPoly& p, const FieldPtr& field) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  const FieldPtr k = common_field(p.field(), field);
  std::vector<KFactor> out;
  if (!k) {
    for (auto& f : factor_rational(p.to_qpoly())) out.push_back({UPoly(f.factor), f.multiplicity});
    return out;
  }
  for (const auto& sq : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree_over_extension(sq.factor, k)) out.push_back({g, sq.multiplicity});
  }
  std::stable_sort(out.begin(), out.end(), [](const KFactor& a, const KFactor& b) {
    return a.factor.degree() < b.factor.degree();
  });
  return out;
}

}  // namespace curvelab
