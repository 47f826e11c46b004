#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "core/invariants.hpp"

using namespace macias;

namespace {

const RingId Z = RingId::integers();
const RingId F2 = RingId::poly_over_fp(2);
const RingId F3 = RingId::poly_over_fp(3);
const RingId Zi = RingId::gaussian_int();
const RingId Z5 = RingId::p_local(5);
const RingId Zhalf = RingId::s_inverted({2});
const RingId Zsixth = RingId::s_inverted({2, 3});

Element el(const RingId& r, const std::string& text) {
  return Element::parse(r, text);
}

}  // namespace

TEST_CASE("semiprimitivity verdicts") {
  Window w = enumerate_elements(Z, 40);
  SemiprimitivityReport r = semiprimitivity(w);
  CHECK(r.semiprimitive);
  CHECK(!r.radical_witness.has_value());
  CHECK(r.cleared == (long)w.elements.size());

  SemiprimitivityReport local = semiprimitivity(enumerate_elements(Z5, 30));
  CHECK(!local.semiprimitive);
  REQUIRE(local.radical_witness.has_value());
  CHECK(local.radical_witness->str() == "5");
}

TEST_CASE("prime density verdicts") {
  Window w = enumerate_elements(Z, 30);
  DensityReport r = prime_density(w);
  CHECK(r.dense);
  CHECK(!r.empty_open_generator.has_value());
  CHECK(r.records.size() == w.elements.size());
  for (size_t i = 0; i < r.records.size(); ++i) {
    CHECK(r.records[i].generator == w.elements[i]);
    REQUIRE(r.records[i].prime_inside.has_value());
    CHECK(in_basic_open(*r.records[i].prime_inside, r.records[i].generator));
    CHECK(!is_unit(*r.records[i].prime_inside));
  }

  DensityReport local = prime_density(enumerate_elements(Z5, 30));
  CHECK(!local.dense);
  REQUIRE(local.empty_open_generator.has_value());
  CHECK(local.empty_open_generator->str() == "5");
}

TEST_CASE("openness verdicts") {
  Window w = enumerate_elements(Z, 30);
  OpennessReport r = units_openness(w);
  CHECK(!r.units_open);
  CHECK(!r.alpha.has_value());
  CHECK(r.records.size() == w.elements.size());
  for (const OpennessRecord& rec : r.records) {
    REQUIRE(rec.non_unit_member.has_value());
    CHECK(!is_unit(*rec.non_unit_member));
    CHECK(in_basic_open(*rec.non_unit_member, rec.generator));
  }

  OpennessReport local = units_openness(enumerate_elements(Z5, 30));
  CHECK(local.units_open);
  REQUIRE(local.alpha.has_value());
  CHECK(local.alpha->str() == "5");
  CHECK(local.alpha_exact);
}

TEST_CASE("four-way equivalence is consistent on both sides") {
  for (const RingId& r : {Z, F2, F3, Zi, Zhalf, Zsixth}) {
    EquivalenceReport e = four_way_equivalence(r, 25);
    CHECK(e.consistent);
    CHECK(e.units_not_open);
    CHECK(e.primes_dense);
    CHECK(e.primes_infinite);
    CHECK(e.semiprimitive);
  }
  EquivalenceReport local = four_way_equivalence(Z5, 25);
  CHECK(local.consistent);
  CHECK(!local.units_not_open);
  CHECK(!local.primes_dense);
  CHECK(!local.primes_infinite);
  CHECK(!local.semiprimitive);
}

TEST_CASE("four-way consistency is bound-independent") {
  for (long bound : {5, 12, 33, 80}) {
    CHECK(four_way_equivalence(Z, bound).consistent);
    CHECK(four_way_equivalence(Z5, bound).consistent);
  }
}

TEST_CASE("maximal singleton closures over the small integer window") {
  std::vector<ClosureDescriptor> m =
      maximal_singleton_closures(enumerate_elements(Z, 10));
  std::vector<std::string> got;
  for (const ClosureDescriptor& c : m) got.push_back(c.str());
  CHECK(got == std::vector<std::string>{
                   "divisible-by{[2]}", "divisible-by{[3]}",
                   "divisible-by{[5]}", "divisible-by{[7]}"});
  // nothing in the list contains another strictly
  for (const ClosureDescriptor& a : m)
    for (const ClosureDescriptor& b : m)
      if (!(a == b)) CHECK(!a.contains(b));
}

TEST_CASE("maximal closures count primes up to the bound") {
  CHECK(maximal_singleton_closures(enumerate_elements(Z, 30)).size() == 10);
  CHECK(maximal_singleton_closures(enumerate_elements(Z5, 30)).size() == 1);
  // gaussian primes of norm <= 25: 1+i, 2+-i, 3, 3+-2i, 4+-i
  CHECK(maximal_singleton_closures(enumerate_elements(Zi, 25)).size() == 8);
}

TEST_CASE("support partition of the ten-window") {
  SupportPartition p = support_partition(enumerate_elements(Z, 10));
  REQUIRE(p.blocks.size() == 7);
  auto strs = [](const std::vector<Element>& v) {
    std::vector<std::string> out;
    for (const Element& e : v) out.push_back(e.str());
    return out;
  };
  CHECK(p.blocks[0].first.is_empty());
  CHECK(strs(p.blocks[0].second) == std::vector<std::string>{"1", "-1"});
  CHECK(p.blocks[1].first.str() == "{[2]}");
  CHECK(strs(p.blocks[1].second) ==
        std::vector<std::string>{"2", "-2", "4", "-4", "8", "-8"});
  CHECK(p.blocks[2].first.str() == "{[3]}");
  CHECK(p.blocks[3].first.str() == "{[5]}");
  CHECK(p.blocks[4].first.str() == "{[7]}");
  CHECK(p.blocks[5].first.str() == "{[2],[3]}");
  CHECK(strs(p.blocks[5].second) == std::vector<std::string>{"6", "-6"});
  CHECK(p.blocks[6].first.str() == "{[2],[5]}");
  CHECK(strs(p.blocks[6].second) == std::vector<std::string>{"10", "-10"});
}

TEST_CASE("partitions cover the window exactly once") {
  for (const RingId& r : {Z, F3, Zi, Z5, Zhalf}) {
    Window w = enumerate_elements(r, 20);
    SupportPartition p = support_partition(w);
    std::set<std::string> seen;
    size_t total = 0;
    for (const auto& [supp, members] : p.blocks) {
      CHECK(!members.empty());
      for (const Element& x : members) {
        CHECK(support(x) == supp);
        CHECK(seen.insert(x.str()).second);
        ++total;
      }
    }
    CHECK(total == w.elements.size());
  }
}

TEST_CASE("classification invariants per ring") {
  auto [zu, zp] = classification_invariants(Z);
  CHECK(zu == Cardinal::finite(2));
  CHECK(zp == Cardinal::countably_infinite());
  auto [fu, fp] = classification_invariants(F2);
  CHECK(fu == Cardinal::finite(1));
  CHECK(fp == Cardinal::countably_infinite());
  auto [gu, gp] = classification_invariants(Zi);
  CHECK(gu == Cardinal::finite(4));
  CHECK(gp == Cardinal::countably_infinite());
  auto [lu, lp] = classification_invariants(Z5);
  CHECK(lu == Cardinal::countably_infinite());
  CHECK(lp == Cardinal::finite(1));
  auto [su, sp] = classification_invariants(Zsixth);
  CHECK(su == Cardinal::countably_infinite());
  CHECK(sp == Cardinal::countably_infinite());
}

TEST_CASE("alpha really cuts out the units in the local ring") {
  Window w = enumerate_elements(Z5, 40);
  OpennessReport r = units_openness(w);
  REQUIRE(r.alpha.has_value());
  for (const Element& s : w.elements)
    CHECK(in_basic_open(s, *r.alpha) == is_unit(s));
}
