#pragma once

#include <optional>
#include <stdexcept>

namespace pres {

struct NoPrimeInRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(long long n);
// Smallest prime in [lo, hi] congruent to residue mod modulus.
long long find_prime(long long residue, long long modulus, long long lo,
                     long long hi);
// Smallest generator of F_p^*.
long long primitive_root(long long p);
// Smallest generator of the subgroup of squares of F_p^*.
long long square_generator(long long p);
// Smallest s in [1, 2p) with s(r-1) = target (mod p); if a parity is
// requested (0 even, 1 odd) and the solution has the wrong parity, s+p is
// returned.  Requires gcd(r-1, p) = 1.
long long solve_s(long long r, long long p, long long target,
                  std::optional<int> parity = std::nullopt);
long long mod_inverse(long long a, long long p);
long long mul_order(long long a, long long p);  // order of a in F_p^*

}  // namespace pres
