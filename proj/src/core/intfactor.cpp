#include "core/intfactor.hpp"

#include "core/error.hpp"

namespace macias::detail {

std::vector<std::pair<mpz_class, long>> factor_positive_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, long>> out;
  if (n <= 1) return out;
  const long trial_limit = 1000000;
  for (long d = 2; d <= trial_limit; d = (d == 2) ? 3 : d + 2) {
    if (mpz_class(d) * d > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      out.emplace_back(mpz_class(d), e);
    }
  }
  if (n > 1) {
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, 12);
    if (n > limit)
      fail(Errc::SizeLimit, "integer factorization beyond the trial-division range");
    out.emplace_back(n, 1);
  }
  return out;
}

std::pair<mpz_class, mpz_class> two_square_split(const mpz_class& q) {
  mpz_class a;
  mpz_sqrt(a.get_mpz_t(), q.get_mpz_t());
  for (; a * a * 2 >= q; --a) {
    mpz_class b2 = q - a * a;
    mpz_class b;
    mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
    if (b * b == b2 && b > 0) return {a, b};
  }
  fail(Errc::Internal, "no two-square decomposition found for " + q.get_str());
}

}  // namespace macias::detail
