#include "plumbtop/numeric.hpp"

#include "plumbtop/error.hpp"

#include <numeric>
#include <string>

namespace plumbtop {

long mod_norm(long a, long n) {
    if (n <= 0)
        throw ValidationError("modulus must be positive");
    long r = a % n;
    return r < 0 ? r + n : r;
}

long mod_inverse(long a, long n) {
    if (n <= 0)
        throw ValidationError("modulus must be positive");
    long r = mod_norm(a, n);
    if (n == 1)
        return 0;
    if (std::gcd(r, n) != 1)
        throw ValidationError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(n));
    // extended Euclid on (r, n)
    long old_r = r, cur_r = n;
    long old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        long q = old_r / cur_r;
        long tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    return mod_norm(old_s, n);
}

mpq_class make_rational(long num, long den) {
    if (den == 0)
        throw ValidationError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace plumbtop
