#include "core/invariants.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"

namespace macias {

namespace {

bool finite_prime_ring(const RingId& ring) {
  return primes_cardinality(ring).is_finite();
}

// Product of one representative per prime class; its basic open is exactly
// the unit group when the class list is complete.
Element full_prime_product(const RingId& ring) {
  long count = primes_cardinality(ring).count();
  Element acc = Element::one(ring);
  for (const PrimeClass& cls : enumerate_prime_classes(ring, count))
    acc = mul(acc, cls.representative);
  return acc;
}

// Prime representative inside sigma_k^0, when one exists.
std::optional<Element> prime_inside_open(const Element& k) {
  try {
    PrimeClass cls = find_prime_outside(support(k));
    if (!coprime(k, cls.representative))
      fail(Errc::Internal, "prime witness not coprime to its generator");
    return cls.representative;
  } catch (const Error& e) {
    if (e.code() == Errc::NoPrimeOutside) return std::nullopt;
    throw;
  }
}

}  // namespace

SemiprimitivityReport semiprimitivity(const Window& w) {
  SemiprimitivityReport rep;
  rep.ring = w.ring;
  rep.bound = w.bound;
  if (finite_prime_ring(w.ring)) {
    rep.semiprimitive = false;
    // Every maximal ideal contains each prime representative; any one of
    // them is a nonzero radical member. Check the containment literally.
    Element witness = nth_prime_class(w.ring, 0).representative;
    long count = primes_cardinality(w.ring).count();
    for (const PrimeClass& cls : enumerate_prime_classes(w.ring, count)) {
      if (!divides(cls.representative, witness))
        fail(Errc::Internal, "radical witness escapes a maximal ideal");
    }
    rep.radical_witness = witness;
    return rep;
  }
  rep.semiprimitive = true;
  for (const Element& x : w.elements) {
    // A maximal ideal avoiding x: any prime class outside supp(x).
    if (!prime_inside_open(x).has_value())
      fail(Errc::Internal, "no maximal ideal avoids " + x.str());
    ++rep.cleared;
  }
  return rep;
}

DensityReport prime_density(const Window& w) {
  DensityReport rep;
  rep.ring = w.ring;
  rep.bound = w.bound;
  if (finite_prime_ring(w.ring)) {
    rep.dense = false;
    // The product of all prime representatives generates a nonempty basic
    // open containing no prime at all.
    Element alpha = full_prime_product(w.ring);
    long count = primes_cardinality(w.ring).count();
    for (const PrimeClass& cls : enumerate_prime_classes(w.ring, count)) {
      if (coprime(alpha, cls.representative))
        fail(Errc::Internal, "prime slipped into the supposedly empty open");
    }
    rep.empty_open_generator = alpha;
  } else {
    rep.dense = true;
  }
  for (const Element& k : w.elements) {
    rep.records.push_back({k, prime_inside_open(k)});
    if (rep.dense && !rep.records.back().prime_inside.has_value())
      fail(Errc::Internal, "dense verdict contradicted at " + k.str());
  }
  return rep;
}

OpennessReport units_openness(const Window& w) {
  OpennessReport rep;
  rep.ring = w.ring;
  rep.bound = w.bound;
  if (finite_prime_ring(w.ring)) {
    rep.units_open = true;
    Element alpha = full_prime_product(w.ring);
    rep.alpha = alpha;
    rep.alpha_exact = true;
    for (const Element& s : w.elements) {
      if (in_basic_open(s, alpha) != is_unit(s)) rep.alpha_exact = false;
    }
    if (!rep.alpha_exact)
      fail(Errc::Internal, "sigma_alpha^0 deviates from the unit group");
    return rep;
  }
  rep.units_open = false;
  for (const Element& k : w.elements) {
    // Non-unit inside sigma_k^0: no basic open fits inside the units.
    std::optional<Element> p = prime_inside_open(k);
    if (!p.has_value() || is_unit(*p))
      fail(Errc::Internal, "missing non-unit witness for " + k.str());
    rep.records.push_back({k, p});
  }
  return rep;
}

std::vector<ClosureDescriptor> maximal_singleton_closures(const Window& w) {
  std::vector<ClosureDescriptor> proper;
  for (const Element& x : w.elements) {
    ClosureDescriptor d = closure_singleton(x);
    if (d.is_whole_space()) continue;
    if (std::find(proper.begin(), proper.end(), d) == proper.end())
      proper.push_back(std::move(d));
  }
  std::vector<ClosureDescriptor> maximal;
  for (const ClosureDescriptor& d : proper) {
    bool dominated = false;
    for (const ClosureDescriptor& other : proper) {
      if (other == d) continue;
      if (other.contains(d)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(d);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const ClosureDescriptor& a, const ClosureDescriptor& b) {
              return a.divisor_support().indices() < b.divisor_support().indices();
            });
  return maximal;
}

SupportPartition support_partition(const Window& w) {
  SupportPartition part;
  part.ring = w.ring;
  part.bound = w.bound;
  std::map<std::vector<long>, size_t> slot;
  for (const Element& x : w.elements) {
    Support s = support(x);
    auto key = s.indices();
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(std::move(key), part.blocks.size());
      part.blocks.push_back({std::move(s), {x}});
    } else {
      part.blocks[it->second].second.push_back(x);
    }
  }
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& b) {
              auto ka = a.first.indices(), kb = b.first.indices();
              if (ka.size() != kb.size()) return ka.size() < kb.size();
              return ka < kb;
            });
  return part;
}

std::pair<Cardinal, Cardinal> classification_invariants(const RingId& ring) {
  return {units_cardinality(ring), primes_cardinality(ring)};
}

EquivalenceReport four_way_equivalence(const RingId& ring, long bound) {
  Window w = enumerate_elements(ring, bound);
  EquivalenceReport rep;
  rep.ring = ring;
  rep.bound = bound;
  rep.openness = units_openness(w);
  rep.density = prime_density(w);
  rep.radical = semiprimitivity(w);
  rep.units_not_open = !rep.openness.units_open;
  rep.primes_dense = rep.density.dense;
  rep.primes_infinite = !primes_cardinality(ring).is_finite();
  rep.semiprimitive = rep.radical.semiprimitive;
  rep.consistent = rep.units_not_open == rep.primes_dense &&
                   rep.primes_dense == rep.primes_infinite &&
                   rep.primes_infinite == rep.semiprimitive;
  return rep;
}

}  // namespace macias
