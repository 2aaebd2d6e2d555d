#include "pres/numth.hpp"

#include <numeric>

namespace pres {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; d++)
    if (n % d == 0) return false;
  return true;
}

long long find_prime(long long residue, long long modulus, long long lo,
                     long long hi) {
  if (lo > hi) throw NoPrimeInRange("find_prime: empty range");
  for (long long n = lo; n <= hi; n++)
    if (n % modulus == ((residue % modulus) + modulus) % modulus &&
        is_prime(n))
      return n;
  throw NoPrimeInRange("find_prime: no prime in range");
}

long long mul_order(long long a, long long p) {
  a = ((a % p) + p) % p;
  if (a == 0) throw std::runtime_error("mul_order: zero");
  long long x = a % p, o = 1;
  while (x != 1) {
    x = (x * a) % p;
    o++;
  }
  return o;
}

long long primitive_root(long long p) {
  for (long long r = 2; r < p; r++)
    if (mul_order(r, p) == p - 1) return r;
  throw std::runtime_error("primitive_root: none found");
}

long long square_generator(long long p) {
  for (long long r = 2; r < p; r++) {
    // r must be a square and generate the square subgroup
    bool sq = false;
    for (long long x = 1; x < p; x++)
      if ((x * x) % p == r) {
        sq = true;
        break;
      }
    if (sq && mul_order(r, p) == (p - 1) / 2) return r;
  }
  throw std::runtime_error("square_generator: none found");
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw std::runtime_error("mod_inverse: not invertible");
  return ((t % p) + p) % p;
}

long long solve_s(long long r, long long p, long long target,
                  std::optional<int> parity) {
  long long rm1 = ((r - 1) % p + p) % p;
  if (rm1 == 0) throw std::runtime_error("solve_s: r = 1 (mod p)");
  long long t = ((target % p) + p) % p;
  long long s = (t * mod_inverse(rm1, p)) % p;
  if (s == 0) s = p;
  if (parity && (s % 2) != *parity) s += p;
  return s;
}

}  // namespace pres
