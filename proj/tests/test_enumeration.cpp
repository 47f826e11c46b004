#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "core/enumeration.hpp"
#include "core/rings.hpp"

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
const RingId Zsixth = RingId::s_inverted({2, 3});
const RingId Zx = RingId::int_poly();

std::vector<std::string> strs(const std::vector<Element>& v) {
  std::vector<std::string> out;
  for (const Element& e : v) out.push_back(e.str());
  return out;
}

std::vector<std::string> prime_strs(const RingId& r, long count) {
  std::vector<std::string> out;
  for (const PrimeClass& c : enumerate_prime_classes(r, count))
    out.push_back(c.representative.str());
  return out;
}

}  // namespace

TEST_CASE("window contents at small bounds") {
  CHECK(strs(enumerate_elements(Z, 3).elements) ==
        std::vector<std::string>{"1", "-1", "2", "-2", "3", "-3"});
  CHECK(strs(enumerate_elements(F2, 4).elements) ==
        std::vector<std::string>{"1", "x", "x+1"});
  CHECK(strs(enumerate_elements(Zi, 2).elements) ==
        std::vector<std::string>{"1", "-1", "i", "-i", "1+i", "1-i", "-1+i",
                                 "-1-i"});
  CHECK(enumerate_elements(F3, 9).elements.size() == 8);  // deg <= 1 over F_3
  CHECK_FAILS(Errc::UnsupportedForRing, enumerate_elements(Zx, 4));
  CHECK_FAILS(Errc::InvalidArgument, enumerate_elements(Z, 0));
}

TEST_CASE("heights") {
  CHECK(height(Element::parse(Z, "-7")) == 7);
  CHECK(height(Element::parse(Zi, "3+4i")) == 25);  // norm
  CHECK(height(Element::parse(F2, "x^2")) == 8);    // p^(deg+1)
  CHECK(height(Element::parse(Z5, "50/3")) == 50);  // max(|num|, den)
  CHECK(height(Element::parse(Zhalf, "3/8")) == 8);
  CHECK(height(Element::parse(Zx, "x^3-5")) == 8);  // max |c_i| * 2^i
  CHECK_FAILS(Errc::ZeroElement, height(Element::zero(Z)));
}

TEST_CASE("windows are exactly the height balls and nest") {
  for (const RingId& r : {Z, F2, F3, Zi, Z5, Zhalf, Zsixth}) {
    Window small = enumerate_elements(r, 12);
    Window large = enumerate_elements(r, 24);
    std::set<std::string> in_large;
    for (const Element& x : large.elements) {
      CHECK(!x.is_zero());
      in_large.insert(x.str());
    }
    CHECK(in_large.size() == large.elements.size());  // no duplicates
    for (const Element& x : small.elements) {
      CHECK(in_large.count(x.str()) == 1);
      // finite unit groups ride along whatever the bound; everything else
      // obeys the height cut
      if (!is_unit(x)) CHECK(height(x) <= 12);
    }
    // the larger window preserves the smaller one as a prefix-ordering:
    // every small element appears, and heights are nondecreasing
    for (size_t i = 0; i + 1 < large.elements.size(); ++i) {
      const Element& a = large.elements[i];
      const Element& b = large.elements[i + 1];
      if (!is_unit(a) && !is_unit(b)) CHECK(height(a) <= height(b));
    }
  }
}

TEST_CASE("prime enumerations are pinned") {
  CHECK(prime_strs(Z, 6) ==
        std::vector<std::string>{"2", "3", "5", "7", "11", "13"});
  CHECK(prime_strs(F2, 6) ==
        std::vector<std::string>{"x", "x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1",
                                 "x^4+x+1"});
  CHECK(prime_strs(F3, 4) ==
        std::vector<std::string>{"x", "x+1", "x+2", "x^2+1"});
  CHECK(prime_strs(Zi, 6) ==
        std::vector<std::string>{"1+i", "2+i", "1+2i", "3", "3+2i", "2+3i"});
  CHECK(prime_strs(Zsixth, 6) ==
        std::vector<std::string>{"5", "7", "11", "13", "17", "19"});
  CHECK(prime_strs(Z5, 1) == std::vector<std::string>{"5"});
  CHECK(prime_strs(Zhalf, 3) == std::vector<std::string>{"3", "5", "7"});
}

TEST_CASE("prime class indices are consistent") {
  for (const RingId& r : {Z, F2, F3, Zi, Zhalf, Zsixth}) {
    auto classes = enumerate_prime_classes(r, 12);
    for (long n = 0; n < 12; ++n) {
      CHECK(classes[n].index == n);
      CHECK(nth_prime_class(r, n) == classes[n]);
      CHECK(prime_class_index(classes[n].representative) == n);
    }
  }
  CHECK_FAILS(Errc::IndexBeyondFinitePrimes, nth_prime_class(Z5, 1));
  CHECK_FAILS(Errc::UnsupportedForRing, nth_prime_class(Zx, 0));
  CHECK_FAILS(Errc::InvalidArgument, nth_prime_class(Z, -1));
}

TEST_CASE("find_prime_outside avoids the given classes") {
  Support empty = Support::empty(Z);
  CHECK(find_prime_outside(empty).index == 0);
  Support first_two(Z, enumerate_prime_classes(Z, 2));
  CHECK(find_prime_outside(first_two).representative.str() == "5");
  Support all_of_them(Z5, enumerate_prime_classes(Z5, 1));
  CHECK_FAILS(Errc::NoPrimeOutside, find_prime_outside(all_of_them));
}

TEST_CASE("unit enumerations are pinned") {
  CHECK(strs(enumerate_units(Z5, 8)) ==
        std::vector<std::string>{"1", "-1", "2", "-2", "1/2", "-1/2", "3",
                                 "-3"});
  CHECK(strs(enumerate_units(Zhalf, 8)) ==
        std::vector<std::string>{"1", "-1", "2", "-2", "1/2", "-1/2", "4",
                                 "-4"});
  CHECK(strs(enumerate_units(Z, 10)) == std::vector<std::string>{"1", "-1"});
  CHECK(strs(enumerate_units(Zi, 10)) ==
        std::vector<std::string>{"1", "-1", "i", "-i"});
  CHECK(strs(enumerate_units(F2, 3)) == std::vector<std::string>{"1"});
}

TEST_CASE("unit enumeration index inverts the enumeration") {
  for (const RingId& r : {Z, Zi, Z5, Zhalf, Zsixth}) {
    std::vector<Element> units = enumerate_units(r, 40);
    for (size_t i = 0; i < units.size(); ++i)
      CHECK(unit_enumeration_index(units[i]) == (long)i);
  }
  CHECK_FAILS(Errc::InvalidArgument,
              unit_enumeration_index(Element::parse(Z, "2")));
}
