#pragma once

#include <utility>
#include <vector>

#include "core/cardinal.hpp"
#include "core/element.hpp"
#include "core/prime_class.hpp"

namespace macias {

// Exact ring arithmetic and the unit/associate/factorization layer shared by
// every higher module. All functions are pure; elements must belong to the
// same ring where two are taken (RingMismatch otherwise).

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element neg(const Element& a);
Element pow_element(const Element& base, long exponent);  // exponent >= 0

// Exact divisibility d | a (d nonzero).
bool divides(const Element& d, const Element& a);
// a / d when d | a; Internal error when it does not.
Element divide_exact(const Element& a, const Element& d);

struct Bezout {
  Element g;  // canonical associate of the gcd
  Element x;
  Element y;  // g == x*a + y*b
};

// Extended gcd for the Euclidean instances; UnsupportedForRing on Z[x].
Bezout gcd_bezout(const Element& a, const Element& b);

bool is_unit(const Element& x);
Element inverse_unit(const Element& u);

struct AssociateForm {
  Element unit;
  Element rep;  // canonical representative; x == unit * rep
};

AssociateForm canonical_associate(const Element& x);

struct UnitDecomposition {
  Element unit;
  std::vector<std::pair<PrimeClass, long>> factors;  // sorted by class index
};

// Unique factorization into canonical prime classes; UnsupportedForRing on Z[x].
UnitDecomposition factor(const Element& x);

// unit * prod(rep^exp); the round-trip inverse of factor.
Element recompose(const UnitDecomposition& d);

// Whether <k> + <s> is the whole ring. Works on every instance including Z[x].
bool coprime(const Element& k, const Element& s);

Cardinal units_cardinality(const RingId& ring);
std::vector<Element> list_units(const RingId& ring);  // finite groups only
Cardinal primes_cardinality(const RingId& ring);      // UnsupportedForRing on Z[x]

}  // namespace macias
