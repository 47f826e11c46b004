#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/element.hpp"
#include "core/prime_class.hpp"
#include "core/support.hpp"

namespace macias {

// Deterministic height-ordered enumeration of elements, units and prime
// classes. Orders are pinned (see enumeration.cpp) and stable across runs;
// prime indices defined here are the currency of Support and HomeoMap.

struct Window {
  RingId ring;
  long bound = 0;
  std::vector<Element> elements;
};

// Int: |x|; PolyOverFp: p^(deg+1); GaussianInt: norm; fractions:
// max(|num|, den); IntPoly: max over i of |c_i| * 2^i.
mpz_class height(const Element& x);

// All nonzero elements of height <= bound in enumeration order. Finite unit
// groups are always included in full, whatever the bound. UnsupportedForRing
// on Z[x], where the element count is exponential in the degree range.
Window enumerate_elements(const RingId& ring, long bound);

PrimeClass nth_prime_class(const RingId& ring, long n);
std::vector<PrimeClass> enumerate_prime_classes(const RingId& ring, long count);

// Index of a canonical prime representative in the enumeration; grows the
// cached table as needed (SizeLimit once the search passes the table cap).
long prime_class_index(const Element& canonical_prime);

// Least-index class outside s; NoPrimeOutside when the finitely many classes
// are all present (the PLocal case).
PrimeClass find_prime_outside(const Support& s);

// First `count` units in enumeration order; finite groups clamp to the full
// group.
std::vector<Element> enumerate_units(const RingId& ring, long count);

// Position of a unit in the enumeration above; used by the fallback unit
// pairing of homeo maps.
long unit_enumeration_index(const Element& u);

}  // namespace macias
