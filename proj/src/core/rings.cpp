#include "core/rings.hpp"

#include <algorithm>

#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/intfactor.hpp"
#include "core/intpoly.hpp"

namespace macias {

namespace {

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring() != b.ring())
    fail(Errc::RingMismatch,
         "elements of " + a.ring().str() + " and " + b.ring().str() + " mixed");
}

void require_nonzero(const Element& x) {
  if (x.is_zero()) fail(Errc::ZeroElement, "operation requires a nonzero element");
}

mpz_class mod_p(const mpz_class& c, long p) {
  mpz_class r = c % p;
  if (r < 0) r += p;
  return r;
}

std::vector<mpz_class> poly_add(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b, int sign_b) {
  std::vector<mpz_class> out(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += sign_b * b[i];
  return out;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Quotient/remainder over F_p; g must be nonzero.
void poly_divmod_fp(std::vector<mpz_class> r, const std::vector<mpz_class>& g,
                    long p, std::vector<mpz_class>& q_out,
                    std::vector<mpz_class>& r_out) {
  std::vector<mpz_class> q;
  if (r.size() >= g.size()) q.assign(r.size() - g.size() + 1, mpz_class(0));
  mpz_class lc_inv;
  if (!mpz_invert(lc_inv.get_mpz_t(), g.back().get_mpz_t(), mpz_class(p).get_mpz_t()))
    fail(Errc::Internal, "leading coefficient not invertible mod p");
  while (r.size() >= g.size() && !r.empty()) {
    size_t shift = r.size() - g.size();
    mpz_class c = mod_p(r.back() * lc_inv, p);
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      r[shift + i] = mod_p(r[shift + i] - c * g[i], p);
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  q_out = std::move(q);
  r_out = std::move(r);
}

// Nearest-integer division: round(n/d) for d > 0, ties toward +inf.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class num = 2 * n + d;
  mpz_class den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Gaussian norm.
mpz_class g_norm(const mpz_class& a, const mpz_class& b) { return a * a + b * b; }

// The p-adic valuation of n != 0.
long valuation(const mpz_class& n, long p) {
  mpz_class m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

// Splits |num| into (S-part, S-free part); the S-free part is the "core"
// whose rational prime factors define the fraction-ring support.
mpz_class s_free_part(const mpz_class& num, const std::vector<long>& s) {
  mpz_class m = abs(num);
  for (long q : s)
    while (mpz_divisible_ui_p(m.get_mpz_t(), q))
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
  return m;
}

mpz_class fraction_core(const Element& x) {
  const RingId& ring = x.ring();
  if (ring.kind() == RingKind::PLocal) {
    mpz_class m = abs(x.num());
    long v = valuation(m, ring.p());
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), ring.p(), v);
    return pe;
  }
  return s_free_part(x.num(), ring.s());
}

using detail::factor_positive_integer;
using detail::two_square_split;

Element gaussian_divide_exact(const Element& a, const Element& d) {
  // (a * conj(d)) / norm(d), both coordinates must divide exactly.
  mpz_class n = g_norm(d.re(), d.im());
  mpz_class re = a.re() * d.re() + a.im() * d.im();
  mpz_class im = a.im() * d.re() - a.re() * d.im();
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    fail(Errc::Internal, "gaussian division is not exact");
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return Element::gaussian(a.ring(), re, im);
}

bool gaussian_divides(const Element& d, const Element& a) {
  mpz_class n = g_norm(d.re(), d.im());
  mpz_class re = a.re() * d.re() + a.im() * d.im();
  mpz_class im = a.im() * d.re() - a.re() * d.im();
  return mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t());
}

// Exact division in Z[x]; returns false when g does not divide f.
bool int_poly_divide(const std::vector<mpz_class>& f,
                     const std::vector<mpz_class>& g,
                     std::vector<mpz_class>* quotient) {
  if (g.empty()) return false;
  std::vector<mpz_class> r = f;
  std::vector<mpz_class> q;
  if (r.size() >= g.size()) q.assign(r.size() - g.size() + 1, mpz_class(0));
  while (r.size() >= g.size() && !r.empty()) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), g.back().get_mpz_t())) return false;
    size_t shift = r.size() - g.size();
    mpz_class c = r.back() / g.back();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  if (!r.empty()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

}  // namespace

Element add(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingId& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Int: return Element::integer(ring, a.int_value() + b.int_value());
    case RingKind::PolyOverFp:
    case RingKind::IntPoly:
      return Element::poly(ring, poly_add(a.coeffs(), b.coeffs(), +1));
    case RingKind::GaussianInt:
      return Element::gaussian(ring, a.re() + b.re(), a.im() + b.im());
    case RingKind::PLocal:
    case RingKind::SInverted:
      return Element::fraction(ring, a.num() * b.den() + b.num() * a.den(),
                               a.den() * b.den());
  }
  fail(Errc::Internal, "bad ring kind");
}

Element sub(const Element& a, const Element& b) { return add(a, neg(b)); }

Element neg(const Element& a) {
  const RingId& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Int: return Element::integer(ring, -a.int_value());
    case RingKind::PolyOverFp:
    case RingKind::IntPoly: {
      std::vector<mpz_class> c = a.coeffs();
      for (auto& x : c) x = -x;
      return Element::poly(ring, std::move(c));
    }
    case RingKind::GaussianInt: return Element::gaussian(ring, -a.re(), -a.im());
    case RingKind::PLocal:
    case RingKind::SInverted: return Element::fraction(ring, -a.num(), a.den());
  }
  fail(Errc::Internal, "bad ring kind");
}

Element mul(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingId& ring = a.ring();
  Element out = [&]() {
    switch (ring.kind()) {
      case RingKind::Int: return Element::integer(ring, a.int_value() * b.int_value());
      case RingKind::PolyOverFp:
      case RingKind::IntPoly:
        return Element::poly(ring, poly_mul(a.coeffs(), b.coeffs()));
      case RingKind::GaussianInt:
        return Element::gaussian(ring, a.re() * b.re() - a.im() * b.im(),
                                 a.re() * b.im() + a.im() * b.re());
      case RingKind::PLocal:
      case RingKind::SInverted:
        return Element::fraction(ring, a.num() * b.num(), a.den() * b.den());
    }
    fail(Errc::Internal, "bad ring kind");
  }();
  out.check_size();
  return out;
}

Element pow_element(const Element& base, long exponent) {
  if (exponent < 0) fail(Errc::InvalidArgument, "negative exponent");
  Element acc = Element::one(base.ring());
  Element sq = base;
  long e = exponent;
  while (e > 0) {
    if (e & 1) acc = mul(acc, sq);
    e >>= 1;
    if (e) sq = mul(sq, sq);
  }
  return acc;
}

bool divides(const Element& d, const Element& a) {
  require_same_ring(d, a);
  require_nonzero(d);
  if (a.is_zero()) return true;
  const RingId& ring = d.ring();
  switch (ring.kind()) {
    case RingKind::Int:
      return mpz_divisible_p(a.int_value().get_mpz_t(), d.int_value().get_mpz_t());
    case RingKind::PolyOverFp: {
      std::vector<mpz_class> q, r;
      poly_divmod_fp(a.coeffs(), d.coeffs(), ring.p(), q, r);
      return r.empty();
    }
    case RingKind::GaussianInt: return gaussian_divides(d, a);
    case RingKind::PLocal: {
      // d | a iff v_p(d) <= v_p(a); everything of valuation zero is a unit.
      long vd = valuation(d.num(), ring.p());
      long va = valuation(a.num(), ring.p());
      return vd <= va;
    }
    case RingKind::SInverted: {
      mpz_class cd = fraction_core(d), ca = fraction_core(a);
      return mpz_divisible_p(ca.get_mpz_t(), cd.get_mpz_t());
    }
    case RingKind::IntPoly: return int_poly_divide(a.coeffs(), d.coeffs(), nullptr);
  }
  fail(Errc::Internal, "bad ring kind");
}

Element divide_exact(const Element& a, const Element& d) {
  require_same_ring(a, d);
  require_nonzero(d);
  if (a.is_zero()) return Element::zero(a.ring());
  const RingId& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Int: {
      if (!mpz_divisible_p(a.int_value().get_mpz_t(), d.int_value().get_mpz_t()))
        fail(Errc::Internal, "division is not exact");
      return Element::integer(ring, a.int_value() / d.int_value());
    }
    case RingKind::PolyOverFp: {
      std::vector<mpz_class> q, r;
      poly_divmod_fp(a.coeffs(), d.coeffs(), ring.p(), q, r);
      if (!r.empty()) fail(Errc::Internal, "division is not exact");
      return Element::poly(ring, std::move(q));
    }
    case RingKind::GaussianInt: return gaussian_divide_exact(a, d);
    case RingKind::PLocal:
    case RingKind::SInverted:
      if (!divides(d, a)) fail(Errc::Internal, "division is not exact");
      return Element::fraction(ring, a.num() * d.den(), a.den() * d.num());
    case RingKind::IntPoly: {
      std::vector<mpz_class> q;
      if (!int_poly_divide(a.coeffs(), d.coeffs(), &q))
        fail(Errc::Internal, "division is not exact");
      return Element::poly(ring, std::move(q));
    }
  }
  fail(Errc::Internal, "bad ring kind");
}

Bezout gcd_bezout(const Element& a, const Element& b) {
  require_same_ring(a, b);
  require_nonzero(a);
  require_nonzero(b);
  const RingId& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::IntPoly:
      fail(Errc::UnsupportedForRing, "Z[x] has no Euclidean gcd; use coprime");
    case RingKind::Int: {
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                 a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
      return {Element::integer(ring, g), Element::integer(ring, x),
              Element::integer(ring, y)};
    }
    case RingKind::PolyOverFp: {
      // Extended Euclid; invariants r0 = x0*a + y0*b, r1 = x1*a + y1*b.
      const long p = ring.p();
      Element r0 = a, r1 = b;
      Element x0 = Element::one(ring), y0 = Element::zero(ring);
      Element x1 = Element::zero(ring), y1 = Element::one(ring);
      while (!r1.is_zero()) {
        std::vector<mpz_class> q, r;
        poly_divmod_fp(r0.coeffs(), r1.coeffs(), p, q, r);
        Element qe = Element::poly(ring, std::move(q));
        Element r2 = Element::poly(ring, std::move(r));
        Element x2 = sub(x0, mul(qe, x1));
        Element y2 = sub(y0, mul(qe, y1));
        r0 = r1; r1 = r2; x0 = x1; x1 = x2; y0 = y1; y1 = y2;
      }
      AssociateForm canon = canonical_associate(r0);
      Element scale = inverse_unit(canon.unit);
      return {canon.rep, mul(scale, x0), mul(scale, y0)};
    }
    case RingKind::GaussianInt: {
      Element r0 = a, r1 = b;
      Element x0 = Element::one(ring), y0 = Element::zero(ring);
      Element x1 = Element::zero(ring), y1 = Element::one(ring);
      while (!r1.is_zero()) {
        // Nearest-rounding quotient keeps N(r) strictly decreasing.
        mpz_class n = g_norm(r1.re(), r1.im());
        mpz_class qre = round_div(r0.re() * r1.re() + r0.im() * r1.im(), n);
        mpz_class qim = round_div(r0.im() * r1.re() - r0.re() * r1.im(), n);
        Element q = Element::gaussian(ring, qre, qim);
        Element r2 = sub(r0, mul(q, r1));
        Element x2 = sub(x0, mul(q, x1));
        Element y2 = sub(y0, mul(q, y1));
        r0 = r1; r1 = r2; x0 = x1; x1 = x2; y0 = y1; y1 = y2;
      }
      AssociateForm canon = canonical_associate(r0);
      Element scale = inverse_unit(canon.unit);
      return {canon.rep, mul(scale, x0), mul(scale, y0)};
    }
    case RingKind::PLocal:
    case RingKind::SInverted: {
      // Write a = u*A, b = v*B with A, B the canonical cores; the integer
      // Bezout identity on the cores transfers through the unit inverses.
      AssociateForm fa = canonical_associate(a);
      AssociateForm fb = canonical_associate(b);
      mpz_class A = fa.rep.num(), B = fb.rep.num();
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), A.get_mpz_t(),
                 B.get_mpz_t());
      Element xe = mul(Element::fraction(ring, x, 1), inverse_unit(fa.unit));
      Element ye = mul(Element::fraction(ring, y, 1), inverse_unit(fb.unit));
      return {Element::fraction(ring, g, 1), xe, ye};
    }
  }
  fail(Errc::Internal, "bad ring kind");
}

bool is_unit(const Element& x) {
  require_nonzero(x);
  const RingId& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::Int: return x.int_value() == 1 || x.int_value() == -1;
    case RingKind::PolyOverFp: return x.degree() == 0;
    case RingKind::GaussianInt: return g_norm(x.re(), x.im()) == 1;
    case RingKind::PLocal: return !mpz_divisible_ui_p(x.num().get_mpz_t(), ring.p());
    case RingKind::SInverted: return s_free_part(x.num(), ring.s()) == 1;
    case RingKind::IntPoly:
      return x.degree() == 0 && (x.coeffs()[0] == 1 || x.coeffs()[0] == -1);
  }
  fail(Errc::Internal, "bad ring kind");
}

Element inverse_unit(const Element& u) {
  if (!is_unit(u)) fail(Errc::InvalidArgument, "element is not a unit");
  const RingId& ring = u.ring();
  switch (ring.kind()) {
    case RingKind::Int:
    case RingKind::IntPoly: return u;  // +-1 are self-inverse
    case RingKind::PolyOverFp: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), u.coeffs()[0].get_mpz_t(),
                 mpz_class(ring.p()).get_mpz_t());
      return Element::poly(ring, {inv});
    }
    case RingKind::GaussianInt:
      return Element::gaussian(ring, u.re(), -u.im());  // conjugate of i^k
    case RingKind::PLocal:
    case RingKind::SInverted: return Element::fraction(ring, u.den(), u.num());
  }
  fail(Errc::Internal, "bad ring kind");
}

AssociateForm canonical_associate(const Element& x) {
  require_nonzero(x);
  const RingId& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::Int: {
      if (x.int_value() < 0)
        return {Element::integer(ring, -1), Element::integer(ring, -x.int_value())};
      return {Element::one(ring), x};
    }
    case RingKind::PolyOverFp: {
      mpz_class lc = x.coeffs().back();
      if (lc == 1) return {Element::one(ring), x};
      Element unit = Element::poly(ring, {lc});
      return {unit, mul(inverse_unit(unit), x)};
    }
    case RingKind::GaussianInt: {
      Element i = Element::gaussian(ring, 0, 1);
      Element cand = x;
      for (int k = 0; k < 4; ++k) {
        if (cand.re() > 0 && cand.im() >= 0) {
          // cand = x * i^k, so x = cand * i^(4-k).
          Element unit = pow_element(i, (4 - k) % 4);
          return {unit, cand};
        }
        cand = mul(cand, i);
      }
      fail(Errc::Internal, "no canonical rotation found");
    }
    case RingKind::PLocal:
    case RingKind::SInverted: {
      Element rep = Element::fraction(ring, fraction_core(x), 1);
      return {divide_exact(x, rep), rep};
    }
    case RingKind::IntPoly: {
      if (x.coeffs().back() < 0) return {neg(Element::one(ring)), neg(x)};
      return {Element::one(ring), x};
    }
  }
  fail(Errc::Internal, "bad ring kind");
}

UnitDecomposition factor(const Element& x) {
  require_nonzero(x);
  const RingId& ring = x.ring();
  if (ring.kind() == RingKind::IntPoly)
    fail(Errc::UnsupportedForRing, "factorization is not available over Z[x]");

  std::vector<std::pair<Element, long>> parts;  // canonical prime, exponent
  Element unit = Element::one(ring);

  switch (ring.kind()) {
    case RingKind::Int: {
      AssociateForm canon = canonical_associate(x);
      unit = canon.unit;
      for (auto& [q, e] : factor_positive_integer(canon.rep.int_value()))
        parts.emplace_back(Element::integer(ring, q), e);
      break;
    }
    case RingKind::PLocal: {
      long v = valuation(x.num(), ring.p());
      if (v > 0)
        parts.emplace_back(Element::fraction(ring, ring.p(), 1), v);
      unit = canonical_associate(x).unit;
      break;
    }
    case RingKind::SInverted: {
      AssociateForm canon = canonical_associate(x);
      unit = canon.unit;
      for (auto& [q, e] : factor_positive_integer(canon.rep.num()))
        parts.emplace_back(Element::fraction(ring, q, 1), e);
      break;
    }
    case RingKind::GaussianInt: {
      Element rest = x;
      mpz_class norm = g_norm(x.re(), x.im());
      for (auto& [q, e] : factor_positive_integer(norm)) {
        std::vector<Element> candidates;
        if (q == 2) {
          candidates.push_back(Element::gaussian(ring, 1, 1));
        } else if (mpz_class(q % 4) == 1) {
          auto [s, t] = two_square_split(q);
          candidates.push_back(Element::gaussian(ring, s, t));
          candidates.push_back(Element::gaussian(ring, t, s));
        } else {
          candidates.push_back(Element::gaussian(ring, q, 0));
        }
        for (const Element& pi : candidates) {
          long mult = 0;
          while (gaussian_divides(pi, rest)) {
            rest = gaussian_divide_exact(rest, pi);
            ++mult;
          }
          if (mult > 0) parts.emplace_back(pi, mult);
        }
      }
      if (!is_unit(rest)) fail(Errc::Internal, "gaussian factorization incomplete");
      unit = rest;
      break;
    }
    case RingKind::PolyOverFp: {
      AssociateForm canon = canonical_associate(x);
      unit = canon.unit;
      Element rest = canon.rep;
      // Trial division by monic polynomials in degree-lexicographic order.
      // With degrees < d fully extracted first, every degree-d divisor found
      // is irreducible.
      const long p = ring.p();
      for (long d = 1; 2 * d <= rest.degree(); ++d) {
        std::vector<long> idx(d, 0);  // low coefficients of the monic candidate
        while (2 * d <= rest.degree()) {
          std::vector<mpz_class> c(d + 1, mpz_class(0));
          for (long i = 0; i < d; ++i) c[i] = idx[i];
          c[d] = 1;
          Element cand = Element::poly(ring, std::move(c));
          long mult = 0;
          while (divides(cand, rest)) {
            rest = divide_exact(rest, cand);
            ++mult;
          }
          if (mult > 0) parts.emplace_back(cand, mult);
          long pos = 0;
          while (pos < d && ++idx[pos] == p) idx[pos++] = 0;
          if (pos == d) break;
        }
      }
      if (rest.degree() >= 1) {
        parts.emplace_back(rest, 1);  // leftover with no divisor of degree <= deg/2
      } else if (rest.coeffs()[0] != 1) {
        fail(Errc::Internal, "monic factor residue expected");
      }
      break;
    }
    default:
      fail(Errc::Internal, "bad ring kind");
  }

  UnitDecomposition out{unit, {}};
  for (auto& [rep, e] : parts) {
    PrimeClass cls{ring, rep, prime_class_index(rep)};
    out.factors.emplace_back(std::move(cls), e);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first.index < b.first.index; });
  return out;
}

Element recompose(const UnitDecomposition& d) {
  Element acc = d.unit;
  for (const auto& [cls, e] : d.factors)
    acc = mul(acc, pow_element(cls.representative, e));
  return acc;
}

bool coprime(const Element& k, const Element& s) {
  require_same_ring(k, s);
  require_nonzero(k);
  require_nonzero(s);
  const RingId& ring = k.ring();
  switch (ring.kind()) {
    case RingKind::IntPoly: return int_poly_coprime(k, s);
    case RingKind::PLocal:
      return valuation(k.num(), ring.p()) == 0 || valuation(s.num(), ring.p()) == 0;
    case RingKind::SInverted: {
      mpz_class g;
      mpz_class ck = fraction_core(k), cs = fraction_core(s);
      mpz_gcd(g.get_mpz_t(), ck.get_mpz_t(), cs.get_mpz_t());
      return g == 1;
    }
    default: {
      Bezout b = gcd_bezout(k, s);
      return is_unit(b.g);
    }
  }
}

Cardinal units_cardinality(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::Int:
    case RingKind::IntPoly: return Cardinal::finite(2);
    case RingKind::PolyOverFp: return Cardinal::finite(ring.p() - 1);
    case RingKind::GaussianInt: return Cardinal::finite(4);
    case RingKind::PLocal:
    case RingKind::SInverted: return Cardinal::countably_infinite();
  }
  fail(Errc::Internal, "bad ring kind");
}

std::vector<Element> list_units(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::Int:
    case RingKind::IntPoly:
      return {Element::one(ring), neg(Element::one(ring))};
    case RingKind::PolyOverFp: {
      std::vector<Element> out;
      for (long c = 1; c < ring.p(); ++c) out.push_back(Element::poly(ring, {mpz_class(c)}));
      return out;
    }
    case RingKind::GaussianInt:
      return {Element::gaussian(ring, 1, 0), Element::gaussian(ring, -1, 0),
              Element::gaussian(ring, 0, 1), Element::gaussian(ring, 0, -1)};
    case RingKind::PLocal:
    case RingKind::SInverted:
      fail(Errc::InfiniteSet, "unit group of " + ring.str() + " is infinite");
  }
  fail(Errc::Internal, "bad ring kind");
}

Cardinal primes_cardinality(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::IntPoly:
      fail(Errc::UnsupportedForRing, "prime enumeration is not available over Z[x]");
    case RingKind::PLocal: return Cardinal::finite(1);
    default: return Cardinal::countably_infinite();
  }
}

}  // namespace macias
