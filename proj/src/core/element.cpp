#include "core/element.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace macias {

namespace {

void strip_trailing_zeros(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool valid_denominator(const RingId& ring, const mpz_class& den) {
  if (ring.kind() == RingKind::PLocal)
    return !mpz_divisible_ui_p(den.get_mpz_t(), ring.p());
  mpz_class d = den;
  for (long q : ring.s()) {
    while (mpz_divisible_ui_p(d.get_mpz_t(), q))
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), q);
  }
  return d == 1;
}

mpz_class parse_integer_token(std::string_view text) {
  if (text.empty()) fail(Errc::ParseError, "empty integer literal");
  if (text[0] == '+') text.remove_prefix(1);  // mpz_set_str takes '-' only
  size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size()) fail(Errc::ParseError, "bare sign in integer literal");
  for (size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(Errc::ParseError, "bad integer literal: " + std::string(text));
  return mpz_class(std::string(text));
}

std::string strip_spaces(std::string_view text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  return t;
}

// Parses "x^3+2x+1" style literals into a coefficient vector (low to high).
std::vector<mpz_class> parse_poly_literal(std::string_view raw) {
  std::string t = strip_spaces(raw);
  if (t.empty()) fail(Errc::ParseError, "empty polynomial literal");
  std::vector<mpz_class> coeffs;
  size_t pos = 0;
  bool first = true;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = (t[pos] == '-') ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail(Errc::ParseError, "expected '+' or '-' in polynomial literal");
    }
    first = false;
    if (pos >= t.size()) fail(Errc::ParseError, "dangling sign in polynomial literal");

    mpz_class coeff = 1;
    bool saw_digits = false;
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos > start) {
      coeff = mpz_class(t.substr(start, pos - start));
      saw_digits = true;
    }
    if (pos < t.size() && t[pos] == '*') ++pos;

    long exponent = 0;
    if (pos < t.size() && t[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        size_t estart = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == estart) fail(Errc::ParseError, "missing exponent after '^'");
        exponent = std::stol(t.substr(estart, pos - estart));
        if (exponent > Element::kMaxDegree)
          fail(Errc::SizeLimit, "polynomial degree exceeds the configured bound");
      }
    } else if (!saw_digits) {
      fail(Errc::ParseError, "expected a term in polynomial literal: " + std::string(raw));
    }
    if (exponent >= static_cast<long>(coeffs.size()))
      coeffs.resize(exponent + 1, mpz_class(0));
    coeffs[exponent] += sign * coeff;
  }
  strip_trailing_zeros(coeffs);
  return coeffs;
}

void append_power(std::string& out, long exponent) {
  if (exponent >= 1) {
    out += 'x';
    if (exponent >= 2) {
      out += '^';
      out += std::to_string(exponent);
    }
  }
}

std::string format_poly(const std::vector<mpz_class>& coeffs, bool signed_coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (long d = static_cast<long>(coeffs.size()) - 1; d >= 0; --d) {
    const mpz_class& c = coeffs[d];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (signed_coeffs && c < 0) out += '-';
    } else {
      out += (signed_coeffs && c < 0) ? '-' : '+';
    }
    if (mag != 1 || d == 0) out += mag.get_str();
    append_power(out, d);
  }
  return out;
}

}  // namespace

Element Element::zero(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::Int: return Element(ring, {mpz_class(0)});
    case RingKind::PolyOverFp:
    case RingKind::IntPoly: return Element(ring, {});
    case RingKind::GaussianInt: return Element(ring, {mpz_class(0), mpz_class(0)});
    case RingKind::PLocal:
    case RingKind::SInverted: return Element(ring, {mpz_class(0), mpz_class(1)});
  }
  fail(Errc::Internal, "bad ring kind");
}

Element Element::one(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::Int: return Element(ring, {mpz_class(1)});
    case RingKind::PolyOverFp:
    case RingKind::IntPoly: return Element(ring, {mpz_class(1)});
    case RingKind::GaussianInt: return Element(ring, {mpz_class(1), mpz_class(0)});
    case RingKind::PLocal:
    case RingKind::SInverted: return Element(ring, {mpz_class(1), mpz_class(1)});
  }
  fail(Errc::Internal, "bad ring kind");
}

Element Element::integer(const RingId& ring, mpz_class n) {
  if (ring.kind() != RingKind::Int) fail(Errc::Internal, "integer() requires Z");
  return Element(ring, {std::move(n)});
}

Element Element::poly(const RingId& ring, std::vector<mpz_class> coeffs) {
  if (!ring.polynomial_ring()) fail(Errc::Internal, "poly() requires a polynomial ring");
  if (ring.kind() == RingKind::PolyOverFp) {
    const long p = ring.p();
    for (auto& c : coeffs) {
      c %= p;
      if (c < 0) c += p;
    }
  }
  strip_trailing_zeros(coeffs);
  return Element(ring, std::move(coeffs));
}

Element Element::gaussian(const RingId& ring, mpz_class re, mpz_class im) {
  if (ring.kind() != RingKind::GaussianInt) fail(Errc::Internal, "gaussian() requires Z[i]");
  return Element(ring, {std::move(re), std::move(im)});
}

Element Element::fraction(const RingId& ring, mpz_class num, mpz_class den) {
  if (!ring.fraction_ring()) fail(Errc::Internal, "fraction() requires a fraction ring");
  if (den == 0) fail(Errc::ParseError, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  if (num == 0) den = 1;
  if (!valid_denominator(ring, den))
    fail(Errc::ParseError,
         "denominator " + den.get_str() + " is not invertible in " + ring.str());
  return Element(ring, {std::move(num), std::move(den)});
}

Element Element::parse(const RingId& ring, std::string_view text) {
  std::string t = strip_spaces(text);
  if (t.empty()) fail(Errc::ParseError, "empty element literal");
  Element out = [&]() -> Element {
    switch (ring.kind()) {
      case RingKind::Int:
        return integer(ring, parse_integer_token(t));
      case RingKind::PolyOverFp:
      case RingKind::IntPoly:
        return poly(ring, parse_poly_literal(t));
      case RingKind::PLocal:
      case RingKind::SInverted: {
        size_t slash = t.find('/');
        if (slash == std::string::npos)
          return fraction(ring, parse_integer_token(t), 1);
        return fraction(ring, parse_integer_token(t.substr(0, slash)),
                        parse_integer_token(t.substr(slash + 1)));
      }
      case RingKind::GaussianInt: {
        // One or two signed terms; a trailing 'i' marks the imaginary part.
        mpz_class re = 0, im = 0;
        bool have_re = false, have_im = false;
        size_t pos = 0;
        while (pos < t.size()) {
          size_t start = pos;
          if (t[pos] == '+' || t[pos] == '-') ++pos;
          while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
          bool imaginary = pos < t.size() && t[pos] == 'i';
          std::string token = t.substr(start, pos - start);
          if (imaginary) ++pos;
          mpz_class value;
          if (token.empty() || token == "+" || token == "-") {
            if (!imaginary) fail(Errc::ParseError, "bad Gaussian literal: " + std::string(text));
            value = (token == "-") ? -1 : 1;
          } else {
            value = parse_integer_token(token);
          }
          if (imaginary) {
            if (have_im) fail(Errc::ParseError, "duplicate imaginary part");
            im = value;
            have_im = true;
          } else {
            if (have_re) fail(Errc::ParseError, "duplicate real part");
            re = value;
            have_re = true;
          }
        }
        if (!have_re && !have_im)
          fail(Errc::ParseError, "bad Gaussian literal: " + std::string(text));
        return gaussian(ring, re, im);
      }
    }
    fail(Errc::Internal, "bad ring kind");
  }();
  out.check_size();
  return out;
}

bool Element::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Int: return v_[0] == 0;
    case RingKind::PolyOverFp:
    case RingKind::IntPoly: return v_.empty();
    case RingKind::GaussianInt: return v_[0] == 0 && v_[1] == 0;
    case RingKind::PLocal:
    case RingKind::SInverted: return v_[0] == 0;
  }
  fail(Errc::Internal, "bad ring kind");
}

std::string Element::str() const {
  switch (ring_.kind()) {
    case RingKind::Int: return v_[0].get_str();
    case RingKind::PolyOverFp: return format_poly(v_, false);
    case RingKind::IntPoly: return format_poly(v_, true);
    case RingKind::PLocal:
    case RingKind::SInverted:
      if (v_[1] == 1) return v_[0].get_str();
      return v_[0].get_str() + "/" + v_[1].get_str();
    case RingKind::GaussianInt: {
      const mpz_class& a = v_[0];
      const mpz_class& b = v_[1];
      if (b == 0) return a.get_str();
      std::string imag;
      mpz_class mag = abs(b);
      if (mag != 1) imag = mag.get_str();
      imag += 'i';
      if (a == 0) return (b < 0 ? "-" : "") + imag;
      return a.get_str() + (b < 0 ? "-" : "+") + imag;
    }
  }
  fail(Errc::Internal, "bad ring kind");
}

const mpz_class& Element::int_value() const {
  if (ring_.kind() != RingKind::Int) fail(Errc::Internal, "not an integer element");
  return v_[0];
}

const std::vector<mpz_class>& Element::coeffs() const {
  if (!ring_.polynomial_ring()) fail(Errc::Internal, "not a polynomial element");
  return v_;
}

long Element::degree() const {
  if (!ring_.polynomial_ring()) fail(Errc::Internal, "not a polynomial element");
  return static_cast<long>(v_.size()) - 1;
}

const mpz_class& Element::re() const {
  if (ring_.kind() != RingKind::GaussianInt) fail(Errc::Internal, "not a Gaussian element");
  return v_[0];
}

const mpz_class& Element::im() const {
  if (ring_.kind() != RingKind::GaussianInt) fail(Errc::Internal, "not a Gaussian element");
  return v_[1];
}

const mpz_class& Element::num() const {
  if (!ring_.fraction_ring()) fail(Errc::Internal, "not a fraction element");
  return v_[0];
}

const mpz_class& Element::den() const {
  if (!ring_.fraction_ring()) fail(Errc::Internal, "not a fraction element");
  return v_[1];
}

void Element::check_size() const {
  if (ring_.polynomial_ring() && static_cast<long>(v_.size()) > kMaxDegree + 1)
    fail(Errc::SizeLimit, "polynomial degree exceeds the configured bound");
  for (const auto& c : v_) {
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > kMaxBits)
      fail(Errc::SizeLimit, "integer component exceeds the configured bit bound");
  }
}

int Element::compare(const Element& a, const Element& b) {
  if (a.ring_ != b.ring_) return a.ring_ < b.ring_ ? -1 : 1;
  if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size() ? -1 : 1;
  for (size_t i = 0; i < a.v_.size(); ++i) {
    int c = cmp(a.v_[i], b.v_[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace macias
