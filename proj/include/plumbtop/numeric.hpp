#pragma once

#include <gmpxx.h>

namespace plumbtop {

// a reduced into [0, n).
long mod_norm(long a, long n);

// Multiplicative inverse of a modulo n, in (0, n).  Requires gcd(a, n) = 1.
long mod_inverse(long a, long n);

// Exact rational num/den in lowest terms.
mpq_class make_rational(long num, long den);

} // namespace plumbtop
