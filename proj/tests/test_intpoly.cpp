#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "core/intpoly.hpp"
#include "core/rings.hpp"

using namespace macias;

namespace {

const RingId Zx = RingId::int_poly();

Element zx(const char* text) { return Element::parse(Zx, text); }

mpz_class res(const std::vector<long>& f, const std::vector<long>& g) {
  std::vector<mpz_class> fv(f.begin(), f.end()), gv(g.begin(), g.end());
  return int_poly_resultant(fv, gv);
}

}  // namespace

TEST_CASE("resultants of small pairs") {
  CHECK(res({1, 1}, {-1, 1}) == -2);       // res(x+1, x-1) = (x-1) at -1
  CHECK(res({0, 1}, {1, 1}) == 1);         // res(x, x+1)
  CHECK(res({2}, {0, 1}) == 2);            // res(2, x)
  CHECK(res({2}, {1, 1}) == 2);            // res(2, x+1): constant^deg
  CHECK(res({1, 0, 1}, {-1, 0, 1}) == 4);  // res(x^2+1, x^2-1)
  CHECK(res({1, 2}, {3, 2}) == 4);         // res(2x+1, 2x+3)
  CHECK(res({0, 0, 1}, {0, 1}) == 0);      // shared root at 0
  CHECK(res({-1, 0, 1}, {1, 1}) == 0);     // x+1 divides x^2-1
}

TEST_CASE("coprimality over the integer polynomials") {
  CHECK(!int_poly_coprime(zx("2"), zx("x")));
  CHECK(!int_poly_coprime(zx("2"), zx("x+1")));  // constant term parity blocks 1
  CHECK(int_poly_coprime(zx("x"), zx("x+1")));
  CHECK(int_poly_coprime(zx("6"), zx("35")));
  CHECK(!int_poly_coprime(zx("6"), zx("15")));
  CHECK(!int_poly_coprime(zx("x^2+1"), zx("x^2-1")));
  CHECK(int_poly_coprime(zx("2x+1"), zx("2x+3")));
  CHECK(!int_poly_coprime(zx("x^2+x+1"), zx("x-1")));  // both vanish mod 3 at 1
  CHECK(int_poly_coprime(zx("x^2+x+1"), zx("x")));
  CHECK(int_poly_coprime(zx("1"), zx("x^5")));
  CHECK(!int_poly_coprime(zx("x"), zx("x^2")));
}

TEST_CASE("coprime is what the public entry point uses") {
  CHECK(coprime(zx("x"), zx("x+1")) == int_poly_coprime(zx("x"), zx("x+1")));
  CHECK(coprime(zx("2"), zx("x")) == int_poly_coprime(zx("2"), zx("x")));
  CHECK(!coprime(zx("2"), zx("x")));
}

TEST_CASE("unit arguments are always coprime") {
  for (const char* u : {"1", "-1"})
    for (const char* other : {"2", "x", "x^2+3x-5", "-1"})
      CHECK(coprime(zx(u), zx(other)));
}

TEST_CASE("coprime is symmetric and associate-invariant on a small sweep") {
  std::vector<Element> pool;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -1; c <= 1; ++c) {
        std::vector<mpz_class> coeffs = {a, b, c};
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.empty()) continue;
        pool.push_back(Element::poly(Zx, coeffs));
      }
  for (const Element& f : pool)
    for (const Element& g : pool) {
      bool fg = coprime(f, g);
      CHECK(fg == coprime(g, f));
      CHECK(fg == coprime(neg(f), g));
      CHECK(fg == coprime(f, neg(g)));
    }
}

TEST_CASE("degenerate input handling") {
  CHECK_THROWS_AS((void)int_poly_coprime(Element::zero(Zx), zx("x")), Error);
  std::vector<mpz_class> zero_poly, x_poly = {0, 1};
  CHECK_THROWS_AS((void)int_poly_resultant(zero_poly, x_poly), Error);
  std::vector<mpz_class> c2 = {2}, c3 = {3};
  CHECK_THROWS_AS((void)int_poly_resultant(c2, c3), Error);  // two constants
}
