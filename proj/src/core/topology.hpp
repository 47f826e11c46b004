#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/enumeration.hpp"
#include "core/rings.hpp"
#include "core/support.hpp"

namespace macias {

// The set of prime classes dividing x; empty exactly for units.
Support support(const Element& x);

// s in sigma_k^0, i.e. <k> + <s> is the whole ring. Production path (gcd).
bool in_basic_open(const Element& s, const Element& k);

// Same value, but computed both by gcd and by support disjointness, failing
// Internal on mismatch. PID instances only; tests use this variant.
bool in_basic_open_checked(const Element& s, const Element& k);

// Symbolic closure of {x}: the whole space for units, otherwise the set of
// elements divisible by every class of a nonempty support.
class ClosureDescriptor {
 public:
  static ClosureDescriptor whole_space(RingId ring);
  static ClosureDescriptor divisible_by_all(Support s);

  bool is_whole_space() const { return !support_.has_value(); }
  const RingId& ring() const { return ring_; }
  const Support& divisor_support() const;

  // Point-set containment: D(s) is a subset of D(s') iff s is a superset
  // of s'; the whole space contains everything.
  bool contains(const ClosureDescriptor& other) const;

  std::string str() const;

  friend bool operator==(const ClosureDescriptor& a, const ClosureDescriptor& b);

 private:
  ClosureDescriptor(RingId ring, std::optional<Support> s)
      : ring_(std::move(ring)), support_(std::move(s)) {}
  RingId ring_;
  std::optional<Support> support_;
};

ClosureDescriptor closure_singleton(const Element& x);

// Window slice of the closure: every y in w whose support contains supp(x).
std::vector<Element> closure_members(const Element& x, const Window& w);

// When y lies outside closure({x}), a prime representative p with p | x and
// p not dividing y (so y is in sigma_p^0 and x is not); nothing otherwise.
std::optional<Element> separating_witness(const Element& x, const Element& y);

bool is_generic_point(const Element& x);

// Directed edges y -> x (as index pairs into w.elements) whenever x lies in
// closure({y}), i.e. supp(y) is a subset of supp(x); reflexive edges omitted.
struct SpecializationGraph {
  RingId ring;
  long bound = 0;
  std::vector<std::pair<long, long>> edges;
};

SpecializationGraph specialization_graph(const Window& w);

// Machine-checked record of the Z[x] counterexample: 2 and x are primes with
// disjoint supports, yet <2, x> is a proper ideal.
struct ZxReport {
  bool two_is_prime = false;
  bool x_is_prime = false;
  bool non_associate = false;
  bool supports_disjoint = false;
  bool coprime_2_x = true;              // must come out false
  bool oracle_coprime_2_x = true;       // bounded cofactor search, false
  std::string ideal_constant_generator; // least positive constant found in <2, x>
  bool even_constant_obstruction = false;
  bool sanity_pair_coprime = false;     // (x, x+1) -> true
  std::string sanity_cofactor_u;        // integer-coefficient certificate
  std::string sanity_cofactor_v;        //   u*x + v*(x+1) = 1
  bool sanity_certificate_checks = false;
  bool regression_2_x1_coprime = true;  // (2, x+1): must come out false
  bool passed = false;
};

ZxReport zx_counterexample();

}  // namespace macias
