#include "core/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>

#include "core/error.hpp"

namespace macias {

namespace {

void reject_zero(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero())
    fail(Errc::ZeroElement, "coprimality is defined on nonzero elements");
  if (a.ring() != b.ring())
    fail(Errc::RingMismatch, "coprimality across rings");
}

// ---- Z[x]: evaluation and mod-q prefilters ---------------------------------

mpz_class eval_at(const std::vector<mpz_class>& c, long t) {
  mpz_class acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

// u*f + v*g = 1 forces gcd(f(t), g(t)) = 1 at every integer t.
bool eval_filter_rejects(const std::vector<mpz_class>& f,
                         const std::vector<mpz_class>& g) {
  for (long t : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
    mpz_class d = gcd(eval_at(f, t), eval_at(g, t));
    if (d != 1) return true;
  }
  return false;
}

std::vector<uint32_t> reduce_mod_q(const std::vector<mpz_class>& c, uint32_t q) {
  std::vector<uint32_t> out;
  out.reserve(c.size());
  for (const auto& x : c) {
    mpz_class r = x % q;
    if (r < 0) r += q;
    out.push_back(static_cast<uint32_t>(r.get_ui()));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Plain F_q Euclid on uint32 coefficient vectors.
bool fq_gcd_nonconstant(std::vector<uint32_t> a, std::vector<uint32_t> b,
                        uint32_t q) {
  auto inv_mod = [&](uint32_t x) {
    // q is prime and tiny; brute force is fine.
    for (uint32_t y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    return 0u;
  };
  while (!b.empty()) {
    uint32_t lead_inv = inv_mod(b.back());
    std::vector<uint32_t> r = a;
    while (r.size() >= b.size()) {
      uint64_t factor = static_cast<uint64_t>(r.back()) * lead_inv % q;
      size_t shift = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = static_cast<uint64_t>(b[i]) * factor % q;
        r[shift + i] = static_cast<uint32_t>((r[shift + i] + q - sub) % q);
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    a = std::move(b);
    b = std::move(r);
  }
  // a holds the gcd; empty means both inputs vanished mod q.
  return a.size() != 1;
}

bool mod_q_filter_rejects(const std::vector<mpz_class>& f,
                          const std::vector<mpz_class>& g) {
  for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    if (fq_gcd_nonconstant(reduce_mod_q(f, q), reduce_mod_q(g, q), q))
      return true;
  }
  return false;
}


// ---- Z[x]: cofactor-lattice triangularization ------------------------------

struct LatticeRow {
  std::vector<mpz_class> c;  // coefficients, degree-indexed
  std::vector<mpz_class> u;  // cofactor on f (empty when untracked)
  std::vector<mpz_class> v;  // cofactor on g (empty when untracked)
};

long row_top(const LatticeRow& r) {
  for (size_t i = r.c.size(); i-- > 0;)
    if (r.c[i] != 0) return static_cast<long>(i);
  return -1;
}

// r -= q * p; in place, no reallocation
void row_subtract(LatticeRow& r, const mpz_class& q, const LatticeRow& p) {
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= q * p.c[i];
  for (size_t i = 0; i < r.u.size(); ++i) r.u[i] -= q * p.u[i];
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] -= q * p.v[i];
}

void row_negate(LatticeRow& r) {
  for (auto& x : r.c) x = -x;
  for (auto& x : r.u) x = -x;
  for (auto& x : r.v) x = -x;
}

}  // namespace

namespace detail {

mpz_class int_poly_constant_generator(
    const std::vector<mpz_class>& f, const std::vector<mpz_class>& g,
    long degree_cap,
    std::pair<std::vector<mpz_class>, std::vector<mpz_class>>* track) {
  const long df = static_cast<long>(f.size()) - 1;
  const long dg = static_cast<long>(g.size()) - 1;
  if (df < 0 || dg < 0) fail(Errc::ZeroElement, "lattice over a zero polynomial");
  if (degree_cap < std::max(df, dg))
    fail(Errc::InvalidArgument, "degree cap below operand degrees");

  const size_t width = static_cast<size_t>(degree_cap) + 1;
  std::vector<std::vector<LatticeRow>> bucket(width);
  auto seed = [&](const std::vector<mpz_class>& poly, long shift, bool on_f) {
    LatticeRow r;
    r.c.assign(width, mpz_class(0));
    if (track) {
      r.u.assign(width, mpz_class(0));
      r.v.assign(width, mpz_class(0));
      (on_f ? r.u : r.v)[shift] = 1;
    }
    for (size_t i = 0; i < poly.size(); ++i) r.c[i + shift] = poly[i];
    bucket[row_top(r)].push_back(std::move(r));
  };
  for (long i = 0; i + df <= degree_cap; ++i) seed(f, i, true);
  for (long j = 0; j + dg <= degree_cap; ++j) seed(g, j, false);

  // Top-down triangularization. Within one bucket the pivot's leading entry
  // is shrunk by plain Euclid steps against each remaining row; the gcdext
  // shortcut looks cheaper but the Bezout multipliers it injects compound
  // across levels until coefficients explode.
  for (long d = degree_cap; d >= 0; --d) {
    auto& rows = bucket[d];
    if (rows.empty()) continue;
    LatticeRow pivot = std::move(rows.back());
    rows.pop_back();
    while (!rows.empty()) {
      LatticeRow r = std::move(rows.back());
      rows.pop_back();
      while (r.c[d] != 0) {
        mpz_class q = r.c[d] / pivot.c[d];
        if (q != 0) row_subtract(r, q, pivot);
        if (r.c[d] != 0) std::swap(r, pivot);
      }
      long top = row_top(r);
      if (top >= 0) bucket[top].push_back(std::move(r));
    }
    if (pivot.c[d] < 0) row_negate(pivot);
    rows.push_back(std::move(pivot));
  }

  if (bucket[0].empty()) return 0;
  const LatticeRow& final_row = bucket[0].front();
  if (track) {
    track->first = final_row.u;
    track->second = final_row.v;
  }
  return final_row.c[0];
}

}  // namespace detail

namespace {

// Fraction-free (Bareiss) determinant of the Sylvester-style block spanned by
// x^i*f (i < dg) and x^j*g (j < df). Zero exactly when f and g share a factor
// over the rationals.
mpz_class shift_block_det(const std::vector<mpz_class>& f,
                          const std::vector<mpz_class>& g) {
  const long df = static_cast<long>(f.size()) - 1;
  const long dg = static_cast<long>(g.size()) - 1;
  const long n = df + dg;
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (long i = 0; i < dg; ++i)
    for (long k = 0; k <= df; ++k) m[i][k + i] = f[k];
  for (long j = 0; j < df; ++j)
    for (long k = 0; k <= dg; ++k) m[dg + j][k + j] = g[k];
  mpz_class prev = 1;
  int sign = 1;
  for (long c = 0; c < n; ++c) {
    long pr = -1;
    for (long r = c; r < n; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) return 0;
    if (pr != c) {
      std::swap(m[pr], m[c]);
      sign = -sign;
    }
    for (long r = c + 1; r < n; ++r) {
      for (long cc = c + 1; cc < n; ++cc)
        m[r][cc] = (m[c][c] * m[r][cc] - m[r][c] * m[c][cc]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Machine-word variant of the modular triangularization below, usable when
// the determinant multiple fits; entries stay below R so the whole reduction
// runs in uint64 with __int128 products.
uint64_t constant_generator_mod_u64(const std::vector<mpz_class>& f,
                                    const std::vector<mpz_class>& g,
                                    long degree_cap, uint64_t R) {
  const long df = static_cast<long>(f.size()) - 1;
  const long dg = static_cast<long>(g.size()) - 1;
  const size_t width = static_cast<size_t>(degree_cap) + 1;
  using Row = std::vector<uint64_t>;
  std::vector<std::vector<Row>> bucket(width);
  auto top_of = [](const Row& r) {
    for (size_t i = r.size(); i-- > 0;)
      if (r[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  auto seed = [&](const std::vector<mpz_class>& poly, long shift) {
    Row r(width, 0);
    for (size_t i = 0; i < poly.size(); ++i)
      r[i + shift] = mpz_fdiv_ui(poly[i].get_mpz_t(), R);
    long top = top_of(r);
    if (top >= 0) bucket[top].push_back(std::move(r));
  };
  for (long i = 0; i + df <= degree_cap; ++i) seed(f, i);
  for (long j = 0; j + dg <= degree_cap; ++j) seed(g, j);
  for (size_t d = 0; d < width; ++d) {
    Row carrier(width, 0);
    carrier[d] = R;
    bucket[d].push_back(std::move(carrier));
  }

  for (long d = static_cast<long>(width) - 1; d >= 0; --d) {
    auto& rows = bucket[d];
    Row pivot = std::move(rows.back());
    rows.pop_back();
    while (!rows.empty()) {
      Row r = std::move(rows.back());
      rows.pop_back();
      while (r[d] != 0) {
        uint64_t q = r[d] / pivot[d];
        if (q != 0)
          for (size_t i = 0; i <= static_cast<size_t>(d); ++i) {
            uint64_t sub = static_cast<uint64_t>(
                static_cast<unsigned __int128>(q) * pivot[i] % R);
            r[i] = r[i] >= sub ? r[i] - sub : r[i] + (R - sub);
          }
        if (r[d] != 0) std::swap(r, pivot);
      }
      long top = top_of(r);
      if (top >= 0) bucket[top].push_back(std::move(r));
    }
    if (d == 0) return std::gcd(pivot[0], R);
    rows.push_back(std::move(pivot));
  }
  return R;  // unreachable; bucket 0 always holds its carrier
}

// Same constant generator as the tracked lattice, but with every row held
// modulo a determinant multiple R of the shift lattice. R*e_i lies in the
// lattice for each coordinate, so mod-R canonicalization is a legal row
// operation and entries never grow past R. Exact triangularization without
// this explodes exponentially with the operand degrees.
mpz_class constant_generator_mod(const std::vector<mpz_class>& f,
                                 const std::vector<mpz_class>& g,
                                 long degree_cap) {
  const long df = static_cast<long>(f.size()) - 1;
  const long dg = static_cast<long>(g.size()) - 1;
  if (degree_cap < std::max(df, dg))
    fail(Errc::InvalidArgument, "degree cap below operand degrees");
  mpz_class R = abs(shift_block_det(f, g));
  if (R == 0) return 0;  // common rational factor: only 0 is reachable
  if (R == 1) return 1;  // e_0 already in the lattice
  if (mpz_fits_ulong_p(R.get_mpz_t()) && mpz_sizeinbase(R.get_mpz_t(), 2) < 64)
    return mpz_class(constant_generator_mod_u64(f, g, degree_cap, R.get_ui()));

  const size_t width = static_cast<size_t>(degree_cap) + 1;
  using Row = std::vector<mpz_class>;
  std::vector<std::vector<Row>> bucket(width);
  auto top_of = [](const Row& r) {
    for (size_t i = r.size(); i-- > 0;)
      if (r[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  auto seed = [&](const std::vector<mpz_class>& poly, long shift) {
    Row r(width, mpz_class(0));
    for (size_t i = 0; i < poly.size(); ++i)
      mpz_fdiv_r(r[i + shift].get_mpz_t(), poly[i].get_mpz_t(), R.get_mpz_t());
    long top = top_of(r);
    if (top >= 0) bucket[top].push_back(std::move(r));
  };
  for (long i = 0; i + df <= degree_cap; ++i) seed(f, i);
  for (long j = 0; j + dg <= degree_cap; ++j) seed(g, j);
  for (size_t d = 0; d < width; ++d) {
    Row carrier(width, mpz_class(0));
    carrier[d] = R;
    bucket[d].push_back(std::move(carrier));
  }

  mpz_class q, prod;
  for (long d = static_cast<long>(width) - 1; d >= 0; --d) {
    auto& rows = bucket[d];
    Row pivot = std::move(rows.back());
    rows.pop_back();
    while (!rows.empty()) {
      Row r = std::move(rows.back());
      rows.pop_back();
      while (r[d] != 0) {
        q = r[d] / pivot[d];
        if (q != 0)
          for (size_t i = 0; i <= static_cast<size_t>(d); ++i) {
            prod = q * pivot[i];
            r[i] -= prod;
            mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), R.get_mpz_t());
          }
        if (r[d] != 0) std::swap(r, pivot);
      }
      long top = top_of(r);
      if (top >= 0) bucket[top].push_back(std::move(r));
    }
    if (d == 0) return gcd(pivot[0], R);
    rows.push_back(std::move(pivot));
  }
  return R;  // unreachable; bucket 0 always holds its carrier
}

// Escalating degree caps; a cap below the operand degrees is skipped.
std::vector<long> cap_ladder(long df, long dg, long requested) {
  std::vector<long> caps;
  for (long c : {4L, 8L, 14L, 40L}) caps.push_back(c);
  if (requested > caps.back()) caps.push_back(requested);
  long floor_cap = std::max(df, dg);
  std::vector<long> out;
  for (long c : caps)
    if (c >= floor_cap) out.push_back(c);
  if (out.empty()) out.push_back(floor_cap);
  return out;
}

OracleCoprimeResult intpoly_oracle(const Element& a, const Element& b,
                                   long bound, bool run_filters) {
  OracleCoprimeResult res;
  const auto& f = a.coeffs();
  const auto& g = b.coeffs();
  const long df = a.degree(), dg = b.degree();

  if (df == 0 && dg == 0) {
    mpz_class x, y, gg;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
               f[0].get_mpz_t(), g[0].get_mpz_t());
    res.constant_generator = abs(gg);
    res.coprime = res.constant_generator == 1;
    if (res.coprime)
      res.cofactors = {Element::poly(a.ring(), {x}), Element::poly(a.ring(), {y})};
    return res;
  }

  if (run_filters) {
    if (eval_filter_rejects(f, g) || mod_q_filter_rejects(f, g)) {
      res.coprime = false;
      return res;
    }
    // boolean-only callers: the generator at the final cap divides the one at
    // every smaller cap, so a single modular pass settles the answer
    long final_cap = cap_ladder(df, dg, bound).back();
    mpz_class n0 = constant_generator_mod(f, g, final_cap);
    res.constant_generator = n0;
    res.degree_cap_used = final_cap;
    res.coprime = n0 == 1;
    return res;
  }

  for (long cap : cap_ladder(df, dg, bound)) {
    mpz_class n0 = constant_generator_mod(f, g, cap);
    res.constant_generator = n0;
    res.degree_cap_used = cap;
    if (n0 == 1) {
      // exact second pass carries the cofactor columns; only worth paying
      // for once the cap is known to work
      std::pair<std::vector<mpz_class>, std::vector<mpz_class>> track;
      detail::int_poly_constant_generator(f, g, cap, &track);
      res.coprime = true;
      res.cofactors = {Element::poly(a.ring(), track.first),
                       Element::poly(a.ring(), track.second)};
      return res;
    }
  }
  res.coprime = false;
  return res;
}

// ---- element-search route for the remaining rings --------------------------

OracleCoprimeResult int_search(const Element& a, const Element& b, long bound) {
  OracleCoprimeResult res;
  const RingId& ring = a.ring();
  const mpz_class &av = a.int_value(), &bv = b.int_value();
  for (long step = 0; step <= bound; ++step) {
    for (long sign : {1, -1}) {
      if (step == 0 && sign < 0) continue;
      mpz_class x = sign * step;
      mpz_class t = 1 - x * av;
      if (!mpz_divisible_p(t.get_mpz_t(), bv.get_mpz_t())) continue;
      mpz_class y = t / bv;
      if (abs(y) > bound) continue;
      res.coprime = true;
      res.cofactors = {Element::integer(ring, x), Element::integer(ring, y)};
      return res;
    }
  }
  res.coprime = false;
  return res;
}

// The search windows repeat constantly (same ring, same 8x-height bound), and
// re-deriving one costs far more than scanning it.
const Window& cached_window(const RingId& ring, long bound) {
  static std::mutex mu;
  static std::map<std::pair<std::string, long>, Window> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(ring.str(), bound);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), enumerate_elements(ring, bound)).first;
  return it->second;
}

OracleCoprimeResult window_search(const Element& a, const Element& b,
                                  long bound) {
  OracleCoprimeResult res;
  const RingId& ring = a.ring();
  Element one = Element::one(ring);
  const Window& w = cached_window(ring, bound);
  mpz_class hb(bound);
  auto attempt = [&](const Element& x) {
    Element t = sub(one, mul(x, a));
    if (t.is_zero()) {
      res.coprime = true;
      res.cofactors = {x, Element::zero(ring)};
      return true;
    }
    if (!divides(b, t)) return false;
    Element y = divide_exact(t, b);
    if (height(y) > hb) return false;
    res.coprime = true;
    res.cofactors = {x, y};
    return true;
  };
  if (attempt(Element::zero(ring))) return res;
  for (const Element& x : w.elements)
    if (attempt(x)) return res;
  res.coprime = false;
  return res;
}

OracleCoprimeResult dispatch(const Element& a, const Element& b, long bound,
                             bool run_filters) {
  reject_zero(a, b);
  if (a.ring().kind() == RingKind::IntPoly)
    return intpoly_oracle(a, b, bound, run_filters);
  if (bound < 1) fail(Errc::InvalidArgument, "search bound must be positive");
  if (a.ring().kind() == RingKind::Int) return int_search(a, b, bound);
  return window_search(a, b, bound);
}

}  // namespace

bool oracle_coprime(const Element& a, const Element& b, long bound) {
  return dispatch(a, b, bound, true).coprime;
}

OracleCoprimeResult oracle_coprime_certified(const Element& a, const Element& b,
                                             long bound) {
  return dispatch(a, b, bound, false);
}

long oracle_default_bound(const Element& a, const Element& b) {
  if (a.ring().kind() == RingKind::IntPoly) return 14;
  mpz_class h = std::max(height(a), height(b));
  if (h > 100000000) fail(Errc::SizeLimit, "operands too tall for oracle search");
  long bound = 8 * h.get_si();
  return std::max(bound, 16L);
}

bool oracle_is_prime(const Element& x) {
  if (x.is_zero()) fail(Errc::ZeroElement, "primality of zero");
  const RingId& ring = x.ring();

  if (ring.kind() == RingKind::IntPoly) {
    if (x.degree() == 0) {
      mpz_class n = abs(x.coeffs()[0]);
      if (n <= 1) return false;
      for (mpz_class d = 2; d * d <= n; ++d)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
      return true;
    }
    if (x.degree() == 1) {
      mpz_class content = gcd(x.coeffs()[0], x.coeffs()[1]);
      return abs(content) == 1;
    }
    fail(Errc::UnsupportedForRing, "trial division over Z[x] stops at degree 1");
  }

  if (is_unit(x)) return false;
  mpz_class h = height(x);
  if (!h.fits_slong_p()) fail(Errc::SizeLimit, "element too tall for trial division");
  long bound = h.get_si() - 1;
  if (bound < 1) return false;
  const Window& w = cached_window(ring, bound);
  for (const Element& d : w.elements) {
    if (is_unit(d)) continue;
    if (!divides(d, x)) continue;
    // in rings with unbounded unit heights an associate of x can sit below
    // x's own height; that is not a proper divisor
    if (divides(x, d)) continue;
    return false;
  }
  return true;
}

WitnessPool WitnessPool::from_window(const Window& w) {
  return WitnessPool{w.ring, w.elements};
}

namespace {

bool oracle_member(const Element& k, const Element& y) {
  return oracle_coprime(k, y, oracle_default_bound(k, y));
}

}  // namespace

std::vector<Element> oracle_closure_upper(const Element& x, const Window& w,
                                          const WitnessPool& pool) {
  if (x.ring() != w.ring || pool.ring != w.ring)
    fail(Errc::RingMismatch, "closure pieces from different rings");
  std::vector<bool> x_member;
  x_member.reserve(pool.generators.size());
  for (const Element& k : pool.generators) x_member.push_back(oracle_member(k, x));
  std::vector<Element> out;
  for (const Element& y : w.elements) {
    bool keep = true;
    for (size_t ki = 0; ki < pool.generators.size(); ++ki) {
      if (x_member[ki]) continue;
      if (oracle_member(pool.generators[ki], y)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(y);
  }
  return out;
}

std::vector<std::vector<Element>> oracle_closure_upper_all(
    const Window& w, const WitnessPool& pool) {
  if (pool.ring != w.ring)
    fail(Errc::RingMismatch, "closure pieces from different rings");
  const size_t nk = pool.generators.size();
  const size_t ny = w.elements.size();
  std::vector<std::vector<bool>> member(nk, std::vector<bool>(ny, false));
  for (size_t ki = 0; ki < nk; ++ki)
    for (size_t yi = 0; yi < ny; ++yi)
      member[ki][yi] = oracle_member(pool.generators[ki], w.elements[yi]);

  std::vector<std::vector<Element>> out(ny);
  for (size_t xi = 0; xi < ny; ++xi) {
    // Pool opens that miss x; any y inside one of them is outside the slice.
    std::vector<size_t> excluders;
    for (size_t ki = 0; ki < nk; ++ki)
      if (!member[ki][xi]) excluders.push_back(ki);
    for (size_t yi = 0; yi < ny; ++yi) {
      bool keep = true;
      for (size_t ki : excluders) {
        if (member[ki][yi]) {
          keep = false;
          break;
        }
      }
      if (keep) out[xi].push_back(w.elements[yi]);
    }
  }
  return out;
}

}  // namespace macias
