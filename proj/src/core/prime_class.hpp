#pragma once

#include "core/element.hpp"

namespace macias {

// An associate class of primes, identified by its canonical representative
// and its position in the ring's deterministic prime enumeration.
struct PrimeClass {
  RingId ring;
  Element representative;
  long index = 0;

  friend bool operator==(const PrimeClass& a, const PrimeClass& b) {
    return a.ring == b.ring && a.representative == b.representative;
  }
};

}  // namespace macias
