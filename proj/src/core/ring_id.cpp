#include "core/ring_id.hpp"

#include <algorithm>
#include <charconv>

#include "core/error.hpp"

namespace macias {

namespace {

bool is_small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long parse_prime(std::string_view text, std::string_view what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail(Errc::ParseError, "expected a prime number in " + std::string(what));
  if (!is_small_prime(value))
    fail(Errc::ParseError, std::to_string(value) + " is not prime in " + std::string(what));
  if (value > 997)
    fail(Errc::SizeLimit, "prime parameter too large: " + std::to_string(value));
  return value;
}

}  // namespace

RingId RingId::integers() { return RingId(RingKind::Int, 0, {}); }

RingId RingId::poly_over_fp(long p) {
  if (!is_small_prime(p) || p > 997)
    fail(Errc::InvalidArgument, "PolyOverFp requires a small prime");
  return RingId(RingKind::PolyOverFp, p, {});
}

RingId RingId::gaussian_int() { return RingId(RingKind::GaussianInt, 0, {}); }

RingId RingId::p_local(long p) {
  if (!is_small_prime(p) || p > 997)
    fail(Errc::InvalidArgument, "PLocal requires a small prime");
  return RingId(RingKind::PLocal, p, {});
}

RingId RingId::s_inverted(std::vector<long> primes) {
  if (primes.empty()) fail(Errc::InvalidArgument, "SInverted requires a nonempty prime set");
  std::sort(primes.begin(), primes.end());
  for (size_t i = 0; i < primes.size(); ++i) {
    if (!is_small_prime(primes[i]) || primes[i] > 997)
      fail(Errc::InvalidArgument, "SInverted set must consist of small primes");
    if (i > 0 && primes[i] == primes[i - 1])
      fail(Errc::InvalidArgument, "SInverted set must consist of distinct primes");
  }
  return RingId(RingKind::SInverted, 0, std::move(primes));
}

RingId RingId::int_poly() { return RingId(RingKind::IntPoly, 0, {}); }

long RingId::p() const {
  if (kind_ != RingKind::PolyOverFp && kind_ != RingKind::PLocal)
    fail(Errc::Internal, "ring has no prime parameter");
  return p_;
}

const std::vector<long>& RingId::s() const {
  if (kind_ != RingKind::SInverted)
    fail(Errc::Internal, "ring has no prime set");
  return s_;
}

RingId RingId::parse(std::string_view spec) {
  std::string t;
  t.reserve(spec.size());
  for (char c : spec)
    if (c != ' ') t.push_back(c);

  if (t == "Z") return integers();
  if (t == "Z[i]") return gaussian_int();
  if (t == "Z[x]") return int_poly();
  if (t.starts_with("GF(") && t.ends_with(")[x]")) {
    auto inner = std::string_view(t).substr(3, t.size() - 7);
    return poly_over_fp(parse_prime(inner, "GF(p)[x]"));
  }
  if (t.starts_with("Z_(") && t.ends_with(")")) {
    auto inner = std::string_view(t).substr(3, t.size() - 4);
    return p_local(parse_prime(inner, "Z_(p)"));
  }
  if (t.starts_with("Z[1/") && t.ends_with("]")) {
    auto inner = std::string_view(t).substr(4, t.size() - 5);
    if (inner.starts_with("{") && inner.ends_with("}"))
      inner = inner.substr(1, inner.size() - 2);
    std::vector<long> primes;
    size_t pos = 0;
    while (pos <= inner.size()) {
      size_t comma = inner.find(',', pos);
      auto piece = inner.substr(pos, comma == std::string_view::npos ? inner.size() - pos
                                                                     : comma - pos);
      primes.push_back(parse_prime(piece, "Z[1/S]"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return s_inverted(std::move(primes));
  }
  fail(Errc::ParseError, "unrecognized ring spec: " + std::string(spec));
}

std::string RingId::str() const {
  switch (kind_) {
    case RingKind::Int: return "Z";
    case RingKind::PolyOverFp: return "GF(" + std::to_string(p_) + ")[x]";
    case RingKind::GaussianInt: return "Z[i]";
    case RingKind::PLocal: return "Z_(" + std::to_string(p_) + ")";
    case RingKind::SInverted: {
      if (s_.size() == 1) return "Z[1/" + std::to_string(s_[0]) + "]";
      std::string out = "Z[1/{";
      for (size_t i = 0; i < s_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s_[i]);
      }
      out += "}]";
      return out;
    }
    case RingKind::IntPoly: return "Z[x]";
  }
  fail(Errc::Internal, "bad ring kind");
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Ok: return "ok";
    case Errc::ZeroElement: return "zero-element";
    case Errc::UnsupportedForRing: return "unsupported-for-ring";
    case Errc::SizeLimit: return "size-limit";
    case Errc::IndexBeyondFinitePrimes: return "index-beyond-finite-primes";
    case Errc::NoPrimeOutside: return "no-prime-outside";
    case Errc::NotHomeomorphicPrecondition: return "not-homeomorphic-precondition";
    case Errc::PreconditionHomeomorphic: return "precondition-homeomorphic";
    case Errc::ParseError: return "parse-error";
    case Errc::RingMismatch: return "ring-mismatch";
    case Errc::InfiniteSet: return "infinite-set";
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace macias
