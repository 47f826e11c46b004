#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "core/enumeration.hpp"
#include "core/rings.hpp"

namespace macias {

// Independent slow-path checks used to cross-validate the production
// implementations. Nothing here calls gcd_bezout or coprime.

// Bounded search for x, y with x*a + y*b = 1. For Int the search runs over
// x in {0, +-1, ..., +-bound}; for the fraction and polynomial rings x runs
// over the height-bound window and y = (1 - x*a)/b must land back in the
// ring within the same height bound. For IntPoly the bound is a degree cap
// on the cofactor lattice (see below) and the answer is exact, not bounded.
bool oracle_coprime(const Element& a, const Element& b, long bound);

struct OracleCoprimeResult {
  bool coprime = false;
  // Cofactors with x*a + y*b = 1 when found (always produced on the true
  // side; the IntPoly route produces them too).
  std::optional<std::pair<Element, Element>> cofactors;
  // IntPoly only: the least positive integer constant in the cofactor
  // lattice at the degree cap. Equals 1 exactly when coprime.
  mpz_class constant_generator = 0;
  long degree_cap_used = 0;
};

OracleCoprimeResult oracle_coprime_certified(const Element& a, const Element& b,
                                             long bound);

// Default search radius: eight times the larger operand height, clamped to
// at least 16.
long oracle_default_bound(const Element& a, const Element& b);

// Trial division over the enumeration: x is prime iff it is a nonzero
// non-unit with no non-unit divisor of height strictly below height(x).
bool oracle_is_prime(const Element& x);

// Witness generators used to over-approximate closures from the outside.
struct WitnessPool {
  RingId ring;
  std::vector<Element> generators;

  static WitnessPool from_window(const Window& w);
};

// {y in w : every pool basic open containing y contains x}. Contains the
// true closure slice; equality on PID windows is checked by tests.
std::vector<Element> oracle_closure_upper(const Element& x, const Window& w,
                                          const WitnessPool& pool);

// Same computation for every window element at once, sharing one membership
// matrix; result i corresponds to w.elements[i].
std::vector<std::vector<Element>> oracle_closure_upper_all(
    const Window& w, const WitnessPool& pool);

namespace detail {

// Triangularizes the integer lattice spanned by the shifts
//   {x^i * f, x^j * g : i, j <= cap - deg}
// with unimodular row operations, keeping one echelon row per degree. The
// degree-0 row, when present, generates the constants of the lattice; 1 is
// in the ideal <f, g> within this degree cap iff that generator is +-1.
// Returns the least positive constant reached, or 0 when no constant row
// appears. When track is non-null, cofactor polynomials u, v with
// u*f + v*g = returned constant are written to it.
mpz_class int_poly_constant_generator(const std::vector<mpz_class>& f,
                                      const std::vector<mpz_class>& g,
                                      long degree_cap,
                                      std::pair<std::vector<mpz_class>,
                                                std::vector<mpz_class>>* track);

}  // namespace detail

}  // namespace macias
