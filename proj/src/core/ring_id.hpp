#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace macias {

enum class RingKind { Int, PolyOverFp, GaussianInt, PLocal, SInverted, IntPoly };

// Identifies one concrete ring instance. Parsed from spec strings like
// "Z", "GF(3)[x]", "Z[i]", "Z_(5)", "Z[1/2]", "Z[1/{2,3}]", "Z[x]".
class RingId {
 public:
  RingId() : RingId(RingKind::Int, 0, {}) {}  // Z; lets report structs default

  static RingId integers();
  static RingId poly_over_fp(long p);
  static RingId gaussian_int();
  static RingId p_local(long p);
  static RingId s_inverted(std::vector<long> primes);
  static RingId int_poly();

  static RingId parse(std::string_view spec);

  RingKind kind() const { return kind_; }
  long p() const;                     // PolyOverFp, PLocal
  const std::vector<long>& s() const; // SInverted, sorted ascending

  std::string str() const;  // canonical spec string

  // Euclidean instances support gcd_bezout; IntPoly does not.
  bool euclidean() const { return kind_ != RingKind::IntPoly; }
  // The PID instances; IntPoly is coprimality-only.
  bool pid() const { return kind_ != RingKind::IntPoly; }
  bool fraction_ring() const {
    return kind_ == RingKind::PLocal || kind_ == RingKind::SInverted;
  }
  bool polynomial_ring() const {
    return kind_ == RingKind::PolyOverFp || kind_ == RingKind::IntPoly;
  }

  friend bool operator==(const RingId& a, const RingId& b) = default;
  friend std::strong_ordering operator<=>(const RingId& a, const RingId& b) = default;

 private:
  RingId(RingKind k, long p, std::vector<long> s)
      : kind_(k), p_(p), s_(std::move(s)) {}

  RingKind kind_;
  long p_ = 0;
  std::vector<long> s_;
};

}  // namespace macias
