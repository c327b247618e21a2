#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace yolift {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Int ipow(const Int& b, unsigned long e);
Int isqrt_floor(const Int& n);
bool is_square(const Int& n, Int* root = nullptr);

// p-adic valuation; v(0) is reported as a large sentinel (1 << 30).
long valp(const Int& n, const Int& p);
long valp(const Rat& q, const Int& p);

Int mod_pow(Int base, Int exp, const Int& m);
Int inv_mod(const Int& a, const Int& m);

// (a/p) for odd prime p, a arbitrary.  0 when p | a.
int legendre(const Int& a, const Int& p);
int kronecker(const Int& a, const Int& b);

bool is_prime(const Int& n);
// trial-division factorization, fine for the sizes handled here
std::map<Int, int> factor(const Int& n);
bool is_squarefree(const Int& n);
std::vector<Int> prime_divisors(const Int& n);
std::vector<long> primes_up_to(long bound);

// Hilbert symbol (a,b)_p over Q_p; p = 0 means the real place.
int hilbert_symbol(Int a, Int b, const Int& p);
// finite ramified primes of the quaternion algebra (a,b / Q)
std::vector<Int> quaternion_ramified_primes(const Int& a, const Int& b);

// square root of a mod p^prec for odd p with (a/p) = 1
Int hensel_sqrt(const Int& a, const Int& p, int prec);

Int binomial(unsigned long n, unsigned long k);

Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

struct MathError : std::runtime_error {
  explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace yolift
