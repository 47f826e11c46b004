#include "core/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "core/error.hpp"
#include "core/intfactor.hpp"
#include "core/rings.hpp"

namespace macias {

namespace {

constexpr long kMaxIntHeight = 10000000;     // table / window growth cap
constexpr long kMaxFractionBound = 5000;     // fraction windows scan bound^2 pairs
constexpr long kMaxTableEntries = 2000000;

// ---- sieve ----

// Rational primes up to limit, ascending.
std::vector<long> sieve_primes(long limit) {
  if (limit < 2) return {};
  std::vector<bool> composite(limit + 1, false);
  std::vector<long> out;
  for (long n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    out.push_back(n);
    for (long m = n * 2; m <= limit; m += n) composite[m] = true;
  }
  return out;
}

// ---- pinned enumeration orders ----

// The sort key shared by windows and prime tables. Lower key = earlier.
// Components: height first, then a per-ring tiebreak.
struct OrderKey {
  mpz_class height;
  std::vector<mpz_class> tie;

  bool operator<(const OrderKey& o) const {
    int c = cmp(height, o.height);
    if (c != 0) return c < 0;
    size_t n = std::min(tie.size(), o.tie.size());
    for (size_t i = 0; i < n; ++i) {
      c = cmp(tie[i], o.tie[i]);
      if (c != 0) return c < 0;
    }
    return tie.size() < o.tie.size();
  }
};

OrderKey order_key(const Element& x) {
  OrderKey k;
  k.height = height(x);
  switch (x.ring().kind()) {
    case RingKind::Int:
      // positive before negative
      k.tie = {x.int_value() < 0 ? mpz_class(1) : mpz_class(0)};
      break;
    case RingKind::PolyOverFp:
    case RingKind::IntPoly: {
      // degree, then coefficients high-to-low
      const auto& c = x.coeffs();
      k.tie.push_back(mpz_class((long)c.size()));
      for (size_t i = c.size(); i-- > 0;) k.tie.push_back(c[i]);
      break;
    }
    case RingKind::GaussianInt:
      // |a| descending, a descending, b descending
      k.tie = {-abs(x.re()), -x.re(), -x.im()};
      break;
    case RingKind::PLocal:
    case RingKind::SInverted:
      // denominator ascending, |num| ascending, positive before negative
      k.tie = {x.den(), abs(x.num()), x.num() < 0 ? mpz_class(1) : mpz_class(0)};
      break;
  }
  return k;
}

void sort_by_order(std::vector<Element>& v) {
  std::vector<std::pair<OrderKey, size_t>> keyed;
  keyed.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) keyed.emplace_back(order_key(v[i]), i);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Element> out;
  out.reserve(v.size());
  for (auto& [k, i] : keyed) out.push_back(std::move(v[i]));
  v = std::move(out);
}

// ---- window generation ----

bool valid_den(const RingId& ring, long den) {
  if (ring.kind() == RingKind::PLocal) return den % ring.p() != 0;
  long d = den;
  for (long q : ring.s())
    while (d % q == 0) d /= q;
  return d == 1;
}

std::vector<Element> window_elements(const RingId& ring, long bound) {
  std::vector<Element> out;
  switch (ring.kind()) {
    case RingKind::Int: {
      if (bound > kMaxIntHeight) fail(Errc::SizeLimit, "window bound too large");
      for (long h = 1; h <= bound; ++h) {
        out.push_back(Element::integer(ring, h));
        out.push_back(Element::integer(ring, -h));
      }
      return out;  // already ordered
    }
    case RingKind::GaussianInt: {
      if (bound > kMaxIntHeight) fail(Errc::SizeLimit, "window bound too large");
      long amax = 1;
      while (amax * amax < bound) ++amax;
      for (long a = -amax; a <= amax; ++a)
        for (long b = -amax; b <= amax; ++b) {
          if (a == 0 && b == 0) continue;
          if (a * a + b * b <= bound) out.push_back(Element::gaussian(ring, a, b));
        }
      sort_by_order(out);
      return out;
    }
    case RingKind::PolyOverFp: {
      const long p = ring.p();
      // Degree-d block has height p^(d+1); the unit block (d = 0) is always
      // included so unit counts are exact at any bound.
      mpz_class h = p;
      long max_deg = 0;
      while (true) {
        mpz_class next = h * p;
        if (next > bound) break;
        h = next;
        ++max_deg;
        if (max_deg > Element::kMaxDegree) fail(Errc::SizeLimit, "window bound too large");
      }
      double count = 1;
      for (long d = 0; d <= max_deg; ++d) count *= p;
      if (count > (double)kMaxTableEntries) fail(Errc::SizeLimit, "window bound too large");
      for (long d = 0; d <= max_deg; ++d) {
        std::vector<long> digits(d + 1, 0);
        digits[d] = 1;
        while (true) {
          std::vector<mpz_class> c(d + 1);
          for (long i = 0; i <= d; ++i) c[i] = digits[i];
          out.push_back(Element::poly(ring, std::move(c)));
          long pos = 0;
          while (pos <= d && ++digits[pos] == p) digits[pos++] = 0;
          if (pos > d) break;  // the leading digit only rolls over on full wrap
        }
      }
      sort_by_order(out);
      return out;
    }
    case RingKind::PLocal:
    case RingKind::SInverted: {
      if (bound > kMaxFractionBound) fail(Errc::SizeLimit, "window bound too large");
      for (long den = 1; den <= bound; ++den) {
        if (!valid_den(ring, den)) continue;
        for (long num = 1; num <= bound; ++num) {
          if (std::gcd(num, den) != 1) continue;
          out.push_back(Element::fraction(ring, num, den));
          out.push_back(Element::fraction(ring, -num, den));
        }
      }
      sort_by_order(out);
      return out;
    }
    case RingKind::IntPoly:
      fail(Errc::UnsupportedForRing,
           "Z[x] windows are not enumerable (element count is exponential)");
  }
  fail(Errc::Internal, "bad ring kind");
}

// All monic polynomials of degree d over F_p, ascending in the coefficient
// tuple (c_{d-1}, ..., c_0) read high-to-low; fn returns false to stop early.
template <class Fn>
void for_each_monic(const RingId& ring, long d, Fn fn) {
  const long p = ring.p();
  std::vector<long> digits(d, 0);  // digits[i] = c_i; c_0 varies fastest
  while (true) {
    std::vector<mpz_class> c(d + 1);
    for (long i = 0; i < d; ++i) c[i] = digits[i];
    c[d] = 1;
    if (!fn(Element::poly(ring, std::move(c)))) return;
    long pos = 0;
    while (pos < d && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == d) return;
  }
}

// ---- prime tables ----

struct PrimeTable {
  std::vector<Element> reps;                       // enumeration order
  std::map<Element, long, Element::Less> index_of;
  mpz_class covered_height = 0;  // complete for canonical primes up to here
};

std::mutex g_mutex;
std::map<RingId, PrimeTable>& tables() {
  static std::map<RingId, PrimeTable> t;
  return t;
}
std::map<RingId, std::pair<long, std::map<Element, long, Element::Less>>>&
unit_tables() {
  // per ring: covered bound, unit -> enumeration index
  static std::map<RingId, std::pair<long, std::map<Element, long, Element::Less>>> t;
  return t;
}

void append_rep(PrimeTable& t, Element rep) {
  t.index_of.emplace(rep, (long)t.reps.size());
  t.reps.push_back(std::move(rep));
}

// Extends the table so that every canonical prime of height <= target is
// listed. Caller holds the lock.
void extend_table(const RingId& ring, PrimeTable& t, const mpz_class& target) {
  if (t.covered_height >= target) return;
  if (target > kMaxIntHeight)
    fail(Errc::SizeLimit, "prime table growth beyond the configured cap");
  long limit = (long)target.get_ui();

  switch (ring.kind()) {
    case RingKind::Int: {
      for (long q : sieve_primes(limit))
        if (mpz_class(q) > t.covered_height) append_rep(t, Element::integer(ring, q));
      break;
    }
    case RingKind::SInverted: {
      const auto& s = ring.s();
      for (long q : sieve_primes(limit)) {
        if (std::find(s.begin(), s.end(), q) != s.end()) continue;
        if (mpz_class(q) > t.covered_height) append_rep(t, Element::fraction(ring, q, 1));
      }
      break;
    }
    case RingKind::PLocal: {
      if (t.reps.empty()) append_rep(t, Element::fraction(ring, ring.p(), 1));
      t.covered_height = target;
      return;
    }
    case RingKind::GaussianInt: {
      // Canonical Gaussian primes of norm <= limit, from the rational primes.
      std::vector<std::pair<OrderKey, Element>> found;
      for (long q : sieve_primes(limit)) {
        std::vector<Element> reps;
        if (q == 2) {
          reps.push_back(Element::gaussian(ring, 1, 1));
        } else if (q % 4 == 1) {
          auto [a, b] = detail::two_square_split(mpz_class(q));
          reps.push_back(Element::gaussian(ring, a, b));
          reps.push_back(Element::gaussian(ring, b, a));
        } else if (q <= limit / q) {
          reps.push_back(Element::gaussian(ring, q, 0));
        }
        for (Element& r : reps) {
          if (height(r) > t.covered_height && height(r) <= target)
            found.emplace_back(order_key(r), std::move(r));
        }
      }
      std::sort(found.begin(), found.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [k, r] : found) append_rep(t, std::move(r));
      break;
    }
    case RingKind::PolyOverFp: {
      const long p = ring.p();
      // Degree-d blocks (d >= 1) whose height p^(d+1) lies in (covered, target].
      mpz_class block_height = p;
      for (long d = 1; d <= Element::kMaxDegree; ++d) {
        block_height *= p;  // now p^(d+1)
        if (block_height > target) break;
        if (block_height <= t.covered_height) continue;
        for_each_monic(ring, d, [&](Element cand) {
          bool irreducible = true;
          for (size_t qi = 0; qi < t.reps.size(); ++qi) {
            if (2 * t.reps[qi].degree() > cand.degree()) break;
            if (divides(t.reps[qi], cand)) {
              irreducible = false;
              break;
            }
          }
          if (irreducible) append_rep(t, std::move(cand));
          return t.reps.size() < (size_t)kMaxTableEntries;
        });
        if (t.reps.size() >= (size_t)kMaxTableEntries)
          fail(Errc::SizeLimit, "prime table growth beyond the configured cap");
      }
      break;
    }
    case RingKind::IntPoly:
      fail(Errc::UnsupportedForRing, "prime enumeration is not available over Z[x]");
  }
  t.covered_height = target;
  if (t.reps.size() >= (size_t)kMaxTableEntries)
    fail(Errc::SizeLimit, "prime table growth beyond the configured cap");
}

PrimeTable& table_for(const RingId& ring) { return tables()[ring]; }

mpz_class grow_start(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::PolyOverFp: {
      mpz_class h = ring.p();
      return h * h;  // degree-1 block
    }
    default: return 64;
  }
}

}  // namespace

mpz_class height(const Element& x) {
  if (x.is_zero()) fail(Errc::ZeroElement, "height of zero");
  switch (x.ring().kind()) {
    case RingKind::Int: return abs(x.int_value());
    case RingKind::PolyOverFp: {
      mpz_class h = 1;
      for (long d = 0; d <= x.degree(); ++d) h *= x.ring().p();
      return h;  // p^(degree+1)
    }
    case RingKind::GaussianInt: return x.re() * x.re() + x.im() * x.im();
    case RingKind::PLocal:
    case RingKind::SInverted: {
      mpz_class a = abs(x.num());
      return std::max(a, x.den());
    }
    case RingKind::IntPoly: {
      mpz_class best = 0;
      mpz_class w = 1;
      for (const auto& c : x.coeffs()) {
        mpz_class v = abs(c) * w;
        if (v > best) best = v;
        w *= 2;
      }
      return best;
    }
  }
  fail(Errc::Internal, "bad ring kind");
}

Window enumerate_elements(const RingId& ring, long bound) {
  if (bound < 1) fail(Errc::InvalidArgument, "window bound must be positive");
  return Window{ring, bound, window_elements(ring, bound)};
}

PrimeClass nth_prime_class(const RingId& ring, long n) {
  if (n < 0) fail(Errc::InvalidArgument, "negative prime index");
  if (ring.kind() == RingKind::IntPoly)
    fail(Errc::UnsupportedForRing, "prime enumeration is not available over Z[x]");
  if (ring.kind() == RingKind::PLocal) {
    if (n > 0)
      fail(Errc::IndexBeyondFinitePrimes,
           ring.str() + " has a single prime class");
    return PrimeClass{ring, Element::fraction(ring, ring.p(), 1), 0};
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  PrimeTable& t = table_for(ring);
  mpz_class target = t.covered_height > 0 ? t.covered_height : grow_start(ring);
  while ((long)t.reps.size() <= n) {
    target *= 2;
    extend_table(ring, t, target);
  }
  return PrimeClass{ring, t.reps[n], n};
}

std::vector<PrimeClass> enumerate_prime_classes(const RingId& ring, long count) {
  std::vector<PrimeClass> out;
  if (count <= 0) return out;
  if (ring.kind() == RingKind::PLocal) {
    out.push_back(nth_prime_class(ring, 0));
    return out;  // the enumeration is exhausted after its single class
  }
  for (long i = 0; i < count; ++i) out.push_back(nth_prime_class(ring, i));
  return out;
}

long prime_class_index(const Element& canonical_prime) {
  const RingId& ring = canonical_prime.ring();
  if (ring.kind() == RingKind::PLocal) {
    if (canonical_prime == Element::fraction(ring, ring.p(), 1)) return 0;
    fail(Errc::Internal, "not the canonical prime of " + ring.str());
  }
  mpz_class h = height(canonical_prime);
  std::lock_guard<std::mutex> lock(g_mutex);
  PrimeTable& t = table_for(ring);
  if (t.covered_height < h) {
    mpz_class target = t.covered_height > 0 ? t.covered_height : grow_start(ring);
    while (target < h) target *= 2;
    extend_table(ring, t, target);
  }
  auto it = t.index_of.find(canonical_prime);
  if (it == t.index_of.end())
    fail(Errc::Internal,
         canonical_prime.str() + " is not a canonical prime of " + ring.str());
  return it->second;
}

PrimeClass find_prime_outside(const Support& s) {
  const RingId& ring = s.ring();
  if (ring.kind() == RingKind::PLocal) {
    if (s.contains(0))
      fail(Errc::NoPrimeOutside,
           "every prime class of " + ring.str() + " lies in the support");
    return nth_prime_class(ring, 0);
  }
  long expected = 0;
  for (const auto& c : s.classes()) {
    if (c.index == expected) ++expected;
    else if (c.index > expected) break;
  }
  return nth_prime_class(ring, expected);
}

std::vector<Element> enumerate_units(const RingId& ring, long count) {
  if (count <= 0) return {};
  if (units_cardinality(ring).is_finite()) {
    std::vector<Element> all = list_units(ring);
    if ((long)all.size() > count) all.erase(all.begin() + count, all.end());
    return all;
  }
  long bound = 8;
  while (true) {
    std::vector<Element> units;
    for (const Element& x : window_elements(ring, bound))
      if (is_unit(x)) units.push_back(x);
    if ((long)units.size() >= count) {
      units.erase(units.begin() + count, units.end());
      return units;
    }
    if (bound >= kMaxFractionBound)
      fail(Errc::SizeLimit, "unit enumeration beyond the window cap");
    bound *= 2;
  }
}

long unit_enumeration_index(const Element& u) {
  if (!is_unit(u)) fail(Errc::InvalidArgument, "element is not a unit");
  const RingId& ring = u.ring();
  if (units_cardinality(ring).is_finite()) {
    std::vector<Element> all = list_units(ring);
    for (size_t i = 0; i < all.size(); ++i)
      if (all[i] == u) return (long)i;
    fail(Errc::Internal, "unit missing from the finite unit list");
  }
  mpz_class h = height(u);
  if (h > kMaxFractionBound)
    fail(Errc::SizeLimit, "unit height beyond the window cap");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& [covered, index_of] = unit_tables()[ring];
  if (covered < (long)h.get_ui() * 2) {
    long bound = std::max<long>(16, covered);
    while (bound < (long)h.get_ui() * 2) bound *= 2;
    bound = std::min(bound, kMaxFractionBound);
    long idx = 0;
    std::map<Element, long, Element::Less> fresh;
    for (const Element& x : window_elements(ring, bound))
      if (is_unit(x)) fresh.emplace(x, idx++);
    covered = bound;
    index_of = std::move(fresh);
  }
  auto it = index_of.find(u);
  if (it == index_of.end()) fail(Errc::Internal, "unit missing from enumeration table");
  return it->second;
}

}  // namespace macias
