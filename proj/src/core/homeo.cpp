#include "core/homeo.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/invariants.hpp"

namespace macias {

namespace {

long valuation_of(mpz_class n, long q) {
  long v = 0;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), q)) {
    n /= q;
    ++v;
  }
  return v;
}

bool supports_signed_exponents(const RingId& a, const RingId& b) {
  return a.kind() == RingKind::SInverted && b.kind() == RingKind::SInverted &&
         a.s().size() == b.s().size();
}

HomeoMap construct_map(const RingId& source, const RingId& target) {
  HomeoMap map;
  map.source = source;
  map.target = target;
  if (units_cardinality(source).is_finite()) {
    map.rule = UnitMapRule::FiniteTable;
    map.source_units = list_units(source);
    map.target_units = list_units(target);
    if (map.source_units.size() != map.target_units.size())
      fail(Errc::Internal, "unit tables of unequal size");
    if (!(map.source_units.front() == Element::one(source)) ||
        !(map.target_units.front() == Element::one(target)))
      fail(Errc::Internal, "unit tables must start at 1");
  } else if (supports_signed_exponents(source, target)) {
    map.rule = UnitMapRule::SignedSExponents;
  } else {
    map.rule = UnitMapRule::EnumerationIndex;
  }
  return map;
}

}  // namespace

PrimeClass map_prime_class(const HomeoMap& map, const PrimeClass& cls) {
  if (cls.ring != map.source)
    fail(Errc::RingMismatch, "prime class from the wrong ring");
  return nth_prime_class(map.target, cls.index);
}

Element map_unit(const HomeoMap& map, const Element& u) {
  if (u.ring() != map.source) fail(Errc::RingMismatch, "unit from the wrong ring");
  if (!is_unit(u)) fail(Errc::InvalidArgument, "unit map applied to a non-unit");
  switch (map.rule) {
    case UnitMapRule::FiniteTable: {
      for (size_t i = 0; i < map.source_units.size(); ++i)
        if (map.source_units[i] == u) return map.target_units[i];
      fail(Errc::Internal, "unit missing from the finite table");
    }
    case UnitMapRule::SignedSExponents: {
      const std::vector<long>& sq = map.source.s();
      const std::vector<long>& tq = map.target.s();
      mpz_class num = 1, den = 1;
      for (size_t i = 0; i < sq.size(); ++i) {
        long e = valuation_of(u.num(), sq[i]) - valuation_of(u.den(), sq[i]);
        for (long k = 0; k < e; ++k) num *= tq[i];
        for (long k = 0; k < -e; ++k) den *= tq[i];
      }
      if (u.num() < 0) num = -num;
      return Element::fraction(map.target, num, den);
    }
    case UnitMapRule::EnumerationIndex: {
      long idx = unit_enumeration_index(u);
      std::vector<Element> units = enumerate_units(map.target, idx + 1);
      return units.at(idx);
    }
  }
  fail(Errc::Internal, "bad unit map rule");
}

HomeoMap invert(const HomeoMap& map) {
  HomeoMap inv;
  inv.source = map.target;
  inv.target = map.source;
  inv.rule = map.rule;
  inv.forward = !map.forward;
  inv.source_units = map.target_units;
  inv.target_units = map.source_units;
  // The tamper control models a one-sided defect; it does not transfer.
  return inv;
}

ClassificationVerdict classify(const RingId& source, const RingId& target) {
  if (source.kind() == RingKind::IntPoly || target.kind() == RingKind::IntPoly)
    fail(Errc::UnsupportedForRing, "classification covers the PID instances");
  ClassificationVerdict v;
  v.source = source;
  v.target = target;
  v.source_units = units_cardinality(source);
  v.target_units = units_cardinality(target);
  v.source_primes = primes_cardinality(source);
  v.target_primes = primes_cardinality(target);
  if (v.source_primes != v.target_primes) {
    v.homeomorphic = false;
    v.differing = "primes";
  } else if (v.source_units != v.target_units) {
    v.homeomorphic = false;
    v.differing = "units";
  } else {
    v.homeomorphic = true;
    v.map = construct_map(source, target);
  }
  return v;
}

HomeoMap build_homeo(const RingId& source, const RingId& target) {
  ClassificationVerdict v = classify(source, target);
  if (!v.homeomorphic)
    fail(Errc::NotHomeomorphicPrecondition,
         "spaces differ on the " + v.differing + " invariant");
  return *v.map;
}

Element apply_homeo(const HomeoMap& map, const Element& x) {
  if (x.ring() != map.source) fail(Errc::RingMismatch, "element from the wrong ring");
  if (x.is_zero()) fail(Errc::ZeroElement, "zero is outside the space");
  UnitDecomposition d = factor(x);
  Element acc = map_unit(map, d.unit);
  for (const auto& [cls, exp] : d.factors) {
    long idx = cls.index;
    if (map.tamper_prime_images.has_value()) {
      auto [a, b] = *map.tamper_prime_images;
      if (idx == a) idx = b;
      else if (idx == b) idx = a;
    }
    Element rep = nth_prime_class(map.target, idx).representative;
    acc = mul(acc, pow_element(rep, exp));
  }
  return acc;
}

Element apply_homeo_inverse(const HomeoMap& map, const Element& y) {
  return apply_homeo(invert(map), y);
}

HomeoVerification verify_images(const HomeoMap& map, const Window& source_window,
                                const std::vector<Element>& images) {
  if (source_window.ring != map.source)
    fail(Errc::RingMismatch, "window over the wrong ring");
  if (images.size() != source_window.elements.size())
    fail(Errc::InvalidArgument, "one image per window element required");
  if (!classify(map.source, map.target).homeomorphic)
    fail(Errc::NotHomeomorphicPrecondition, "spaces are not homeomorphic");

  HomeoVerification rep;
  rep.source = map.source;
  rep.target = map.target;
  rep.bound = source_window.bound;
  const long n = static_cast<long>(images.size());
  rep.elements = n;
  rep.pairs = n * n;
  const size_t kMaxSamples = 25;
  auto flag = [&](std::string text) {
    ++rep.violation_count;
    if (rep.violations.size() < kMaxSamples) rep.violations.push_back(std::move(text));
  };

  rep.injective = true;
  {
    std::vector<long> order(images.size());
    std::iota(order.begin(), order.end(), 0L);
    Element::Less less;
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return less(images[a], images[b]); });
    for (size_t i = 1; i < order.size(); ++i) {
      if (images[order[i - 1]] == images[order[i]]) {
        rep.injective = false;
        flag("duplicate-image: " +
             source_window.elements[order[i - 1]].str() + " and " +
             source_window.elements[order[i]].str() + " -> " +
             images[order[i]].str());
      }
    }
  }

  rep.supports_transported = true;
  for (long i = 0; i < n; ++i) {
    // phi preserves indices, so the transported support is the same index set.
    if (support(source_window.elements[i]).indices() != support(images[i]).indices()) {
      rep.supports_transported = false;
      flag("support-transport: " + source_window.elements[i].str() + " -> " +
           images[i].str());
    }
  }

  rep.membership_preserved = true;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      bool before = in_basic_open(source_window.elements[i], source_window.elements[j]);
      bool after = in_basic_open(images[i], images[j]);
      if (before != after) {
        rep.membership_preserved = false;
        flag("membership: (" + source_window.elements[i].str() + ", sigma_" +
             source_window.elements[j].str() + ") " +
             (before ? "in" : "out") + " but image " + (after ? "in" : "out"));
      }
    }
  }

  rep.roundtrip = true;
  for (long i = 0; i < n; ++i) {
    if (!(apply_homeo_inverse(map, images[i]) == source_window.elements[i])) {
      rep.roundtrip = false;
      flag("roundtrip: " + source_window.elements[i].str() + " -> " +
           images[i].str());
    }
  }

  rep.passed = rep.injective && rep.supports_transported &&
               rep.membership_preserved && rep.roundtrip;
  return rep;
}

HomeoVerification verify_homeo(const HomeoMap& map, const Window& source_window) {
  std::vector<Element> images;
  images.reserve(source_window.elements.size());
  for (const Element& x : source_window.elements)
    images.push_back(apply_homeo(map, x));
  return verify_images(map, source_window, images);
}

namespace {

std::vector<long> bound_ladder(long b) {
  std::vector<long> out;
  if (b > 10) out.push_back(10);
  if (b / 2 > 10) out.push_back(b / 2);
  out.push_back(b);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Window filter_window(const Window& w, long sub_bound) {
  Window out{w.ring, sub_bound, {}};
  mpz_class cap(sub_bound);
  for (const Element& e : w.elements)
    if (height(e) <= cap) out.elements.push_back(e);
  return out;
}

std::vector<CountSample> sample_counts(const Window& w, bool generic_points) {
  std::vector<CountSample> out;
  for (long b : bound_ladder(w.bound)) {
    Window sub = filter_window(w, b);
    long count = 0;
    if (generic_points) {
      for (const Element& e : sub.elements)
        if (is_generic_point(e)) ++count;
    } else {
      count = static_cast<long>(maximal_singleton_closures(sub).size());
    }
    out.push_back({b, count});
  }
  return out;
}

}  // namespace

NonHomeoCertificate non_homeo_certificate(const RingId& source,
                                          const RingId& target,
                                          const Window& w_source,
                                          const Window& w_target) {
  ClassificationVerdict v = classify(source, target);
  if (v.homeomorphic)
    fail(Errc::PreconditionHomeomorphic, "spaces are homeomorphic");
  if (w_source.ring != source || w_target.ring != target)
    fail(Errc::RingMismatch, "windows do not match the rings");

  NonHomeoCertificate cert;
  cert.source = source;
  cert.target = target;
  cert.differing = v.differing;
  cert.source_units = v.source_units;
  cert.target_units = v.target_units;
  cert.source_primes = v.source_primes;
  cert.target_primes = v.target_primes;
  bool generic = v.differing == "units";
  cert.counted = generic ? "generic-points" : "maximal-closures";
  cert.source_counts = sample_counts(w_source, generic);
  cert.target_counts = sample_counts(w_target, generic);
  cert.discrepant = true;
  size_t common = std::min(cert.source_counts.size(), cert.target_counts.size());
  for (size_t i = 0; i < common; ++i) {
    if (cert.source_counts[i].count == cert.target_counts[i].count)
      cert.discrepant = false;
  }
  return cert;
}

}  // namespace macias
