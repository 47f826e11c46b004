#include "core/topology.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"
#include "core/oracle.hpp"

namespace macias {

Support support(const Element& x) {
  if (x.ring().kind() == RingKind::IntPoly)
    fail(Errc::UnsupportedForRing, "support over Z[x] needs full factorization");
  if (x.is_zero()) fail(Errc::ZeroElement, "support of zero");
  UnitDecomposition d = factor(x);
  std::vector<PrimeClass> classes;
  classes.reserve(d.factors.size());
  for (const auto& [cls, exp] : d.factors) classes.push_back(cls);
  return Support(x.ring(), std::move(classes));
}

bool in_basic_open(const Element& s, const Element& k) {
  return coprime(k, s);
}

bool in_basic_open_checked(const Element& s, const Element& k) {
  if (s.ring().kind() == RingKind::IntPoly)
    fail(Errc::UnsupportedForRing, "checked membership needs prime supports");
  bool via_gcd = coprime(k, s);
  bool via_support = support(k).disjoint_with(support(s));
  if (via_gcd != via_support)
    fail(Errc::Internal, "membership routes disagree on " + s.str() + " in sigma_" + k.str());
  return via_gcd;
}

ClosureDescriptor ClosureDescriptor::whole_space(RingId ring) {
  return ClosureDescriptor(std::move(ring), std::nullopt);
}

ClosureDescriptor ClosureDescriptor::divisible_by_all(Support s) {
  if (s.is_empty())
    fail(Errc::InvalidArgument, "divisibility closure needs a nonempty support");
  RingId ring = s.ring();
  return ClosureDescriptor(std::move(ring), std::move(s));
}

const Support& ClosureDescriptor::divisor_support() const {
  if (!support_.has_value())
    fail(Errc::InvalidArgument, "whole-space closure has no divisor support");
  return *support_;
}

bool ClosureDescriptor::contains(const ClosureDescriptor& other) const {
  if (ring_ != other.ring_)
    fail(Errc::RingMismatch, "closure containment across rings");
  if (is_whole_space()) return true;
  if (other.is_whole_space()) return false;
  // Fewer required divisors = bigger set.
  return support_->subset_of(*other.support_);
}

bool operator==(const ClosureDescriptor& a, const ClosureDescriptor& b) {
  if (a.ring_ != b.ring_) return false;
  if (a.is_whole_space() != b.is_whole_space()) return false;
  if (a.is_whole_space()) return true;
  return *a.support_ == *b.support_;
}

std::string ClosureDescriptor::str() const {
  if (is_whole_space()) return "whole-space";
  return "divisible-by" + support_->str();
}

ClosureDescriptor closure_singleton(const Element& x) {
  Support s = support(x);
  if (s.is_empty()) return ClosureDescriptor::whole_space(x.ring());
  return ClosureDescriptor::divisible_by_all(std::move(s));
}

std::vector<Element> closure_members(const Element& x, const Window& w) {
  if (x.ring() != w.ring)
    fail(Errc::RingMismatch, "closure window over a different ring");
  Support sx = support(x);
  std::vector<Element> out;
  for (const Element& y : w.elements) {
    if (sx.subset_of(support(y))) out.push_back(y);
  }
  return out;
}

std::optional<Element> separating_witness(const Element& x, const Element& y) {
  if (x.ring() != y.ring())
    fail(Errc::RingMismatch, "witness arguments from different rings");
  Support sx = support(x);
  Support sy = support(y);
  for (const PrimeClass& cls : sx.classes()) {
    if (!sy.contains(cls.index)) return cls.representative;
  }
  return std::nullopt;
}

bool is_generic_point(const Element& x) {
  if (x.is_zero()) fail(Errc::ZeroElement, "zero is not a point of the space");
  return is_unit(x);
}

SpecializationGraph specialization_graph(const Window& w) {
  SpecializationGraph g{w.ring, w.bound, {}};
  std::vector<Support> supports;
  supports.reserve(w.elements.size());
  for (const Element& e : w.elements) supports.push_back(support(e));
  const long n = static_cast<long>(w.elements.size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      if (supports[i].subset_of(supports[j])) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

namespace {

// Every combination u*2 + v*x has constant term 2*u(0): sweep a cofactor
// grid, form the combination literally, and confirm the constant term is
// always even (so never 1).
bool check_even_constant_obstruction() {
  const long kCoeff = 3;
  const long kDeg = 2;
  RingId zx = RingId::int_poly();
  Element two = Element::poly(zx, {mpz_class(2)});
  Element x = Element::parse(zx, "x");
  auto advance = [](std::vector<long>& c) {
    for (auto& d : c) {
      if (d < kCoeff) {
        ++d;
        return true;
      }
      d = -kCoeff;
    }
    return false;
  };
  auto lift = [&](const std::vector<long>& c) {
    std::vector<mpz_class> out(c.begin(), c.end());
    return Element::poly(zx, std::move(out));
  };
  std::vector<long> u(kDeg + 1, -kCoeff);
  do {
    std::vector<long> v(kDeg + 1, -kCoeff);
    do {
      Element combo = add(mul(lift(u), two), mul(lift(v), x));
      mpz_class constant = combo.is_zero() ? mpz_class(0) : combo.coeffs()[0];
      if (mpz_odd_p(constant.get_mpz_t())) return false;
    } while (advance(v));
  } while (advance(u));
  return true;
}

}  // namespace

ZxReport zx_counterexample() {
  RingId zx = RingId::int_poly();
  Element two = Element::poly(zx, {mpz_class(2)});
  Element x = Element::parse(zx, "x");
  Element x1 = Element::parse(zx, "x+1");
  Element one = Element::one(zx);

  ZxReport r;
  r.two_is_prime = oracle_is_prime(two);
  r.x_is_prime = oracle_is_prime(x);
  r.non_associate = !divides(two, x) && !divides(x, two);
  // Z[x] has no support() map; disjointness comes from the element-level
  // fact that no prime divides both: common divisors of 2 and x are units.
  bool common_divisor_found = false;
  for (long c = -2; c <= 2; ++c) {
    if (c == 0 || c == 1 || c == -1) continue;
    Element d = Element::poly(zx, {mpz_class(c)});
    if (divides(d, two) && divides(d, x)) common_divisor_found = true;
  }
  if (divides(x, two)) common_divisor_found = true;
  r.supports_disjoint = !common_divisor_found;

  r.coprime_2_x = coprime(two, x);
  OracleCoprimeResult o = oracle_coprime_certified(two, x, 8);
  r.oracle_coprime_2_x = o.coprime;
  r.ideal_constant_generator = o.constant_generator.get_str();
  r.even_constant_obstruction = check_even_constant_obstruction();

  r.sanity_pair_coprime = coprime(x, x1);
  Element u = Element::poly(zx, {mpz_class(-1)});
  Element v = Element::one(zx);
  r.sanity_cofactor_u = u.str();
  r.sanity_cofactor_v = v.str();
  r.sanity_certificate_checks = add(mul(u, x), mul(v, x1)) == one;
  r.regression_2_x1_coprime = coprime(two, x1);

  r.passed = r.two_is_prime && r.x_is_prime && r.non_associate &&
             r.supports_disjoint && !r.coprime_2_x && !r.oracle_coprime_2_x &&
             r.ideal_constant_generator == "2" && r.even_constant_obstruction &&
             r.sanity_pair_coprime && r.sanity_certificate_checks &&
             !r.regression_2_x1_coprime;
  return r;
}

}  // namespace macias
