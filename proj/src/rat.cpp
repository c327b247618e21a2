#include "yolift/rat.hpp"

namespace yolift {

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int isqrt_floor(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

long valp(const Int& n, const Int& p) {
  if (n == 0) return 1L << 30;
  Int m = abs(n);
  long v = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

long valp(const Rat& q, const Int& p) {
  if (q == 0) return 1L << 30;
  return valp(Int(q.get_num()), p) - valp(Int(q.get_den()), p);
}

Int mod_pow(Int base, Int exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw MathError("inv_mod: not invertible");
  return r;
}

int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, int> factor(const Int& n) {
  std::map<Int, int> f;
  Int m = abs(n);
  if (m <= 1) return f;
  for (Int p = 2; p * p <= m;) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f[p] = e;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) f[m] += 1;
  return f;
}

bool is_squarefree(const Int& n) {
  for (auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> ps;
  for (auto& [p, e] : factor(n)) ps.push_back(p);
  return ps;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<long> ps;
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    ps.push_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
  }
  return ps;
}

namespace {

// (a,b)_2 for 2-adic units written as a = 2^alpha u, b = 2^beta v
int hilbert2(const Int& a, const Int& b) {
  long alpha = valp(a, 2), beta = valp(b, 2);
  Int u = a / ipow(2, alpha), v = b / ipow(2, beta);
  auto eps = [](const Int& x) { return ((x - 1) / 2) % 2 != 0 ? 1 : 0; };
  auto omg = [](const Int& x) { return ((x * x - 1) / 8) % 2 != 0 ? 1 : 0; };
  long e = eps(u) * eps(v) + alpha * omg(v) + beta * omg(u);
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace

int hilbert_symbol(Int a, Int b, const Int& p) {
  if (a == 0 || b == 0) throw MathError("hilbert_symbol: zero argument");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (p == 2) return hilbert2(a, b);
  long alpha = valp(a, p), beta = valp(b, p);
  Int u = a / ipow(p, alpha), v = b / ipow(p, beta);
  // (a,b)_p = (-1)^{alpha beta eps(p)} (u/p)^beta (v/p)^alpha
  int s = 1;
  if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(v, p);
  return s;
}

std::vector<Int> quaternion_ramified_primes(const Int& a, const Int& b) {
  std::map<Int, int> cand;
  cand[2] = 1;
  for (auto& p : prime_divisors(a)) cand[p] = 1;
  for (auto& p : prime_divisors(b)) cand[p] = 1;
  std::vector<Int> ram;
  for (auto& [p, _] : cand)
    if (hilbert_symbol(a, b, p) == -1) ram.push_back(p);
  return ram;
}

Int hensel_sqrt(const Int& a, const Int& p, int prec) {
  if (p == 2) throw MathError("hensel_sqrt: p = 2 unsupported");
  Int pm = ipow(p, prec);
  Int a0 = ((a % pm) + pm) % pm;
  if (legendre(a0, p) != 1) throw MathError("hensel_sqrt: not a residue");
  // Tonelli-Shanks mod p
  Int q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (legendre(z, p) != -1) ++z;
  Int m = s, c = mod_pow(z, q, p), t = mod_pow(a0, q, p),
      r = mod_pow(a0, (q + 1) / 2, p);
  while (t != 1) {
    Int tt = t;
    long i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int bexp = ipow(2, mpz_get_ui(Int(m - i - 1).get_mpz_t()));
    Int bb = mod_pow(c, bexp, p);
    m = i;
    c = bb * bb % p;
    t = t * c % p;
    r = r * bb % p;
  }
  // lift to p^prec
  Int mod = p;
  while (mod < pm) {
    mod = mod * mod;
    if (mod > pm) mod = pm;
    Int inv2r = inv_mod(2 * r, mod);
    r = (r - (r * r - a0) % mod * inv2r) % mod;
    r = ((r % mod) + mod) % mod;
  }
  return r % pm;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int u = inv_mod(m1 % m2, m2);
  Int x = r1 + m1 * (((r2 - r1) * u) % m2);
  Int m = m1 * m2;
  x %= m;
  if (x < 0) x += m;
  return x;
}

}  // namespace yolift
