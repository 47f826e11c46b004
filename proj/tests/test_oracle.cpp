#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "core/oracle.hpp"
#include "core/topology.hpp"

using namespace macias;

namespace {

#define CHECK_FAILS(expected, expr)                                   \
  do {                                                            \
    try {                                                         \
      (void)(expr);                                               \
      FAIL("expected an error from " #expr);                      \
    } catch (const Error& e) {                                    \
      CHECK(e.code() == (expected));                                  \
    }                                                             \
  } while (0)

const RingId Z = RingId::integers();
const RingId F2 = RingId::poly_over_fp(2);
const RingId F3 = RingId::poly_over_fp(3);
const RingId Zi = RingId::gaussian_int();
const RingId Z5 = RingId::p_local(5);
const RingId Zhalf = RingId::s_inverted({2});
const RingId Zx = RingId::int_poly();

Element el(const RingId& r, const std::string& text) {
  return Element::parse(r, text);
}

void check_certificate(const Element& a, const Element& b,
                       const OracleCoprimeResult& res) {
  REQUIRE(res.cofactors.has_value());
  const auto& [x, y] = *res.cofactors;
  CHECK(add(mul(x, a), mul(y, b)) == Element::one(a.ring()));
}

}  // namespace

TEST_CASE("search bounds") {
  CHECK(oracle_default_bound(el(Z, "1"), el(Z, "1")) == 16);  // clamped up
  CHECK(oracle_default_bound(el(Z, "6"), el(Z, "35")) == 280);
  CHECK(oracle_default_bound(el(Zx, "x"), el(Zx, "2")) == 14);
  CHECK_FAILS(Errc::InvalidArgument, oracle_coprime(el(Z, "2"), el(Z, "3"), 0));
  CHECK_FAILS(Errc::ZeroElement,
              oracle_coprime(Element::zero(Z), el(Z, "3"), 16));
  CHECK_FAILS(Errc::RingMismatch, oracle_coprime(el(Z, "2"), el(Zi, "3"), 16));
}

TEST_CASE("integer cofactor search") {
  CHECK(oracle_coprime(el(Z, "6"), el(Z, "35"), 280));
  CHECK(!oracle_coprime(el(Z, "4"), el(Z, "6"), 48));
  OracleCoprimeResult r =
      oracle_coprime_certified(el(Z, "6"), el(Z, "35"), 280);
  CHECK(r.coprime);
  check_certificate(el(Z, "6"), el(Z, "35"), r);
}

TEST_CASE("oracle matches the production path across windows") {
  // fraction rings keep small windows: their search radius is 8x the height,
  // and the searched window grows quadratically with it
  const std::pair<const RingId*, long> plan[] = {
      {&Z, 10}, {&F2, 10}, {&F3, 10}, {&Zi, 10}, {&Z5, 6}, {&Zhalf, 8}};
  for (const auto& [ring, window_bound] : plan) {
    Window w = enumerate_elements(*ring, window_bound);
    for (const Element& a : w.elements)
      for (const Element& b : w.elements) {
        long bound = oracle_default_bound(a, b);
        bool slow = oracle_coprime(a, b, bound);
        CHECK(slow == coprime(a, b));
        if (slow) {
          OracleCoprimeResult cert = oracle_coprime_certified(a, b, bound);
          CHECK(cert.coprime);
          check_certificate(a, b, cert);
        }
      }
  }
}

TEST_CASE("integer polynomial lattice answers") {
  OracleCoprimeResult two_x =
      oracle_coprime_certified(el(Zx, "2"), el(Zx, "x"), 40);
  CHECK(!two_x.coprime);
  CHECK(two_x.constant_generator == 2);
  CHECK(two_x.degree_cap_used == 40);

  OracleCoprimeResult adjacent =
      oracle_coprime_certified(el(Zx, "x"), el(Zx, "x+1"), 14);
  CHECK(adjacent.coprime);
  CHECK(adjacent.constant_generator == 1);
  CHECK(adjacent.degree_cap_used <= 4);  // resolves on the first ladder rung
  check_certificate(el(Zx, "x"), el(Zx, "x+1"), adjacent);

  OracleCoprimeResult odd_pair =
      oracle_coprime_certified(el(Zx, "2x+1"), el(Zx, "2x+3"), 14);
  CHECK(odd_pair.coprime);
  check_certificate(el(Zx, "2x+1"), el(Zx, "2x+3"), odd_pair);

  CHECK(!oracle_coprime(el(Zx, "2"), el(Zx, "x+1"), 14));
  CHECK(!oracle_coprime(el(Zx, "x^2+1"), el(Zx, "x^2-1"), 14));
  CHECK(oracle_coprime(el(Zx, "6"), el(Zx, "35"), 14));
  CHECK(!oracle_coprime(el(Zx, "6"), el(Zx, "15"), 14));
}

TEST_CASE("integer polynomial oracle agrees with the resultant route") {
  std::vector<Element> pool;
  for (long a = -3; a <= 3; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -1; c <= 1; ++c) {
        std::vector<mpz_class> coeffs = {a, b, c};
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.empty()) continue;
        pool.push_back(Element::poly(Zx, coeffs));
      }
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i; j < pool.size(); ++j) {
      bool fast = coprime(pool[i], pool[j]);
      CHECK(fast == oracle_coprime(pool[i], pool[j], 14));
      if (fast)
        check_certificate(pool[i], pool[j],
                          oracle_coprime_certified(pool[i], pool[j], 14));
    }
}

TEST_CASE("trial-division primality") {
  CHECK(oracle_is_prime(el(Z, "7")));
  CHECK(!oracle_is_prime(el(Z, "9")));
  CHECK(oracle_is_prime(el(Z, "-13")));
  CHECK(!oracle_is_prime(el(Z, "1")));
  CHECK(oracle_is_prime(el(Zi, "1+i")));
  CHECK(!oracle_is_prime(el(Zi, "2")));  // (1+i)^2 up to a unit
  CHECK(oracle_is_prime(el(Zi, "2+i")));
  CHECK(oracle_is_prime(el(Zi, "3")));
  CHECK(oracle_is_prime(el(F2, "x^2+x+1")));
  CHECK(!oracle_is_prime(el(F2, "x^2+1")));  // (x+1)^2 over F_2
  CHECK(oracle_is_prime(el(Z5, "5")));
  CHECK(!oracle_is_prime(el(Z5, "2")));  // a unit there
  CHECK(oracle_is_prime(el(Zx, "2")));
  CHECK(oracle_is_prime(el(Zx, "x+1")));
  CHECK(!oracle_is_prime(el(Zx, "4")));
  CHECK_FAILS(Errc::UnsupportedForRing, oracle_is_prime(el(Zx, "x^2+1")));
  CHECK_FAILS(Errc::ZeroElement, oracle_is_prime(Element::zero(Z)));
}

TEST_CASE("primality agrees with the factorization layer") {
  for (const RingId& ring : {Z, F2, Zi, Zhalf}) {
    Window w = enumerate_elements(ring, 30);
    for (const Element& x : w.elements) {
      UnitDecomposition d = factor(x);
      bool is_prime_by_factor =
          d.factors.size() == 1 && d.factors[0].second == 1;
      CHECK(oracle_is_prime(x) == is_prime_by_factor);
    }
  }
}

TEST_CASE("closure upper bound collapses to the exact slice") {
  // Z[1/2] windows are dense and its oracle searches are wide; keep it small
  const std::pair<const RingId*, long> plan[] = {
      {&Z, 20}, {&F2, 20}, {&Zi, 20}, {&Zhalf, 12}};
  for (const auto& [ring_ptr, bound] : plan) {
    const RingId& ring = *ring_ptr;
    Window w = enumerate_elements(ring, bound);
    WitnessPool pool = WitnessPool::from_window(w);
    auto all = oracle_closure_upper_all(w, pool);
    REQUIRE(all.size() == w.elements.size());
    for (size_t i = 0; i < w.elements.size(); ++i) {
      const Element& x = w.elements[i];
      std::vector<Element> expect = closure_members(x, w);
      CHECK(all[i] == expect);
      CHECK(oracle_closure_upper(x, w, pool) == expect);
    }
  }
}

TEST_CASE("poorer pools only ever enlarge the upper bound") {
  Window w = enumerate_elements(Z, 20);
  WitnessPool full = WitnessPool::from_window(w);
  WitnessPool tiny{Z, {el(Z, "2"), el(Z, "3")}};
  for (const Element& x : w.elements) {
    std::vector<Element> sharp = oracle_closure_upper(x, w, full);
    std::vector<Element> loose = oracle_closure_upper(x, w, tiny);
    std::set<std::string> loose_set;
    for (const Element& y : loose) loose_set.insert(y.str());
    for (const Element& y : sharp) CHECK(loose_set.count(y.str()) == 1);
  }
  // with witnesses for 2 and 3 only, 25 is indistinguishable from a unit
  std::vector<Element> for_25 = oracle_closure_upper(el(Z, "25"), w, tiny);
  CHECK(for_25.size() == w.elements.size());
}
