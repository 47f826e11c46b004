#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "core/ring_id.hpp"

namespace macias {

// A tagged exact value in one of the six supported rings.
//
// Storage layout of v_ by ring kind:
//   Int          {n}
//   PolyOverFp   {c0, ..., cd}   coefficients in [0, p), no trailing zeros
//   GaussianInt  {re, im}
//   PLocal       {num, den}      reduced, den > 0, p does not divide den
//   SInverted    {num, den}      reduced, den > 0, den a product of primes in S
//   IntPoly      {c0, ..., cd}   no trailing zeros
//
// Zero is representable (operations that require membership in the punctured
// ring reject it with ZeroElement).
class Element {
 public:
  static constexpr size_t kMaxBits = 256;
  static constexpr long kMaxDegree = 64;

  static Element zero(const RingId& ring);
  static Element one(const RingId& ring);

  static Element integer(const RingId& ring, mpz_class n);   // Int
  static Element poly(const RingId& ring, std::vector<mpz_class> coeffs);
  static Element gaussian(const RingId& ring, mpz_class re, mpz_class im);
  static Element fraction(const RingId& ring, mpz_class num, mpz_class den);

  // Parses a canonical or reasonably-written literal for the ring.
  static Element parse(const RingId& ring, std::string_view text);

  const RingId& ring() const { return ring_; }
  bool is_zero() const;

  // Canonical literal; round-trips through parse.
  std::string str() const;

  const mpz_class& int_value() const;
  const std::vector<mpz_class>& coeffs() const;
  long degree() const;  // polynomial rings; -1 for zero
  const mpz_class& re() const;
  const mpz_class& im() const;
  const mpz_class& num() const;
  const mpz_class& den() const;

  // Throws SizeLimit when the representation exceeds the configured bounds.
  void check_size() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.v_ == b.v_;
  }

  // Total order (ring, then value) used for deterministic sets and maps.
  static int compare(const Element& a, const Element& b);
  struct Less {
    bool operator()(const Element& a, const Element& b) const {
      return compare(a, b) < 0;
    }
  };

 private:
  Element(RingId ring, std::vector<mpz_class> v)
      : ring_(std::move(ring)), v_(std::move(v)) {}

  RingId ring_;
  std::vector<mpz_class> v_;
};

}  // namespace macias
