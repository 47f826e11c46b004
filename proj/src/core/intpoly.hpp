#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/element.hpp"

namespace macias {

// Resultant of two nonzero integer polynomials, computed as the Sylvester
// determinant via fraction-free elimination. deg f = deg g = 0 is rejected
// by callers (the resultant is not defined there).
mpz_class int_poly_resultant(const std::vector<mpz_class>& f,
                             const std::vector<mpz_class>& g);

// Whether <f, g> = Z[x]. Complete for nonzero inputs: the ideal is the whole
// ring iff the resultant is nonzero and, for every prime q dividing it, the
// reductions mod q have a nonzero-constant gcd in F_q[x]; two constants
// reduce to an integer gcd check.
bool int_poly_coprime(const Element& f, const Element& g);

}  // namespace macias
