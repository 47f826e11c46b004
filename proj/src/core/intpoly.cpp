#include "core/intpoly.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "core/error.hpp"
#include "core/intfactor.hpp"

namespace macias {

namespace {

// ---- Sylvester determinant via fraction-free (Bareiss) elimination ----

// Generic mpz version. Matrix is row-major, n x n.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<mpz_class>> sylvester(const std::vector<mpz_class>& f,
                                              const std::vector<mpz_class>& g) {
  const size_t m = f.size() - 1, n = g.size() - 1;
  std::vector<std::vector<mpz_class>> s(m + n, std::vector<mpz_class>(m + n, mpz_class(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return s;
}

// int64 Bareiss; valid when the Hadamard bound keeps every minor below 2^61.
// Intermediates use __int128 but stored entries stay in int64.
bool bareiss_det_i64(std::vector<int64_t> m, size_t n, int64_t* out) {
  int sign = 1;
  int64_t prev = 1;
  auto at = [&](size_t i, size_t j) -> int64_t& { return m[i * n + j]; };
  for (size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) {
        *out = 0;
        return true;
      }
      for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        __int128 t = (__int128)at(i, j) * at(k, k) - (__int128)at(i, k) * at(k, j);
        at(i, j) = (int64_t)(t / prev);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  *out = sign * at(n - 1, n - 1);
  return true;
}

bool hadamard_fits_i64(const std::vector<mpz_class>& f,
                       const std::vector<mpz_class>& g) {
  // Row norms of the Sylvester matrix: deg(g) rows of f, deg(f) rows of g.
  double log2_f = 0, log2_g = 0;
  double sq = 0;
  for (const auto& c : f) {
    double d = std::abs(c.get_d());
    if (d > 1e18) return false;
    sq += d * d;
  }
  log2_f = 0.5 * std::log2(sq);
  sq = 0;
  for (const auto& c : g) {
    double d = std::abs(c.get_d());
    if (d > 1e18) return false;
    sq += d * d;
  }
  log2_g = 0.5 * std::log2(sq);
  double total = log2_f * (double)(g.size() - 1) + log2_g * (double)(f.size() - 1);
  return total < 60.0;
}

// ---- gcd over F_q ----

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) {
  return (uint64_t)((unsigned __int128)a * b % q);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t q) {
  uint64_t r = 1;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> reduce_mod(const std::vector<mpz_class>& f, uint64_t q) {
  std::vector<uint64_t> out(f.size());
  mpz_class t;
  for (size_t i = 0; i < f.size(); ++i) {
    t = f[i] % (unsigned long)q;
    if (t < 0) t += (unsigned long)q;
    out[i] = t.get_ui();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// True iff gcd(a, b) over F_q is a nonzero constant; gcd(0, c) for constant
// c != 0 counts, gcd(0, 0) does not.
bool fq_gcd_is_constant(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t q) {
  while (!b.empty()) {
    // a mod b via Fermat inverse of the leading coefficient (q is prime).
    uint64_t lc_inv = powmod(b.back(), q - 2, q);
    while (a.size() >= b.size()) {
      uint64_t c = mulmod(a.back(), lc_inv, q);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = mulmod(c, b[i], q);
        uint64_t& slot = a[shift + i];
        slot = (slot + q - sub) % q;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

}  // namespace

mpz_class int_poly_resultant(const std::vector<mpz_class>& f,
                             const std::vector<mpz_class>& g) {
  if (f.empty() || g.empty()) fail(Errc::ZeroElement, "resultant of zero polynomial");
  if (f.size() == 1 && g.size() == 1)
    fail(Errc::InvalidArgument, "resultant needs a nonconstant operand");
  if (hadamard_fits_i64(f, g)) {
    const size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
    std::vector<int64_t> s(N * N, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j <= m; ++j) s[i * N + i + j] = (int64_t)f[m - j].get_si();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j <= n; ++j) s[(n + i) * N + i + j] = (int64_t)g[n - j].get_si();
    int64_t det = 0;
    if (bareiss_det_i64(std::move(s), N, &det)) return mpz_class((long)det);
  }
  return bareiss_det(sylvester(f, g));
}

bool int_poly_coprime(const Element& f, const Element& g) {
  const std::vector<mpz_class>& fc = f.coeffs();
  const std::vector<mpz_class>& gc = g.coeffs();
  if (fc.empty() || gc.empty()) fail(Errc::ZeroElement, "coprime requires nonzero elements");

  if (fc.size() == 1 && gc.size() == 1) {
    mpz_class a = abs(fc[0]), b = abs(gc[0]), d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return d == 1;
  }

  mpz_class res = int_poly_resultant(fc, gc);
  if (res == 0) return false;  // common factor over the rationals
  mpz_class r = abs(res);
  if (r == 1) return true;

  // <f, g> = Z[x] iff the reductions stay coprime at every prime of the
  // resultant; primes not dividing it are automatic since res lies in the
  // ideal.
  for (const auto& [q, e] : detail::factor_positive_integer(r)) {
    (void)e;
    uint64_t qu = (uint64_t)q.get_ui();
    if (!fq_gcd_is_constant(reduce_mod(fc, qu), reduce_mod(gc, qu), qu)) return false;
  }
  return true;
}

}  // namespace macias
