#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yolift/numfield.hpp"

using namespace yolift;

TEST_CASE("integer helpers") {
  CHECK(ipow(Int(3), 4) == 81);
  CHECK(valp(Int(48), 2) == 4);
  CHECK(valp(make_rat(3, 8), 2) == -3);
  CHECK(is_prime(Int(101)));
  CHECK(!is_prime(Int(1001)));
  auto f = factor(Int(360));
  CHECK(f[Int(2)] == 3);
  CHECK(f[Int(3)] == 2);
  CHECK(f[Int(5)] == 1);
  CHECK(is_squarefree(Int(30)));
  CHECK(!is_squarefree(Int(12)));
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("hilbert symbols pick out quaternion ramification") {
  // (-1,-1): ramified exactly at 2 and infinity
  auto ram = quaternion_ramified_primes(-1, -1);
  REQUIRE(ram.size() == 1);
  CHECK(ram[0] == 2);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  // (-1,-11): ramified at 11
  ram = quaternion_ramified_primes(-1, -11);
  REQUIRE(ram.size() == 1);
  CHECK(ram[0] == 11);
  // (-2,-5): ramified at 5
  ram = quaternion_ramified_primes(-2, -5);
  REQUIRE(ram.size() == 1);
  CHECK(ram[0] == 5);
}

TEST_CASE("hensel sqrt") {
  Int r = hensel_sqrt(-1, 5, 10);
  Int m = ipow(5, 10);
  CHECK((r * r + 1) % m == 0);
  r = hensel_sqrt(-11, 37, 8);
  m = ipow(37, 8);
  CHECK(((r * r + 11) % m + m) % m == 0);
}

TEST_CASE("rational field") {
  auto Q = NumberField::rationals();
  FE a = Q->from_rational(make_rat(2, 3));
  FE b = Q->from_rational(make_rat(1, 6));
  CHECK((a * b).rational() == make_rat(1, 9));
  CHECK((a / b).rational() == 4);
  CHECK((a - a).is_zero());
}

TEST_CASE("multiquadratic arithmetic") {
  auto F = NumberField::make({Int(-1), Int(-11)});
  CHECK(F->degree() == 4);
  FE i = F->sqrt_of(-1);
  FE s = F->sqrt_of(-11);
  CHECK((i * i).rational() == -1);
  CHECK((s * s).rational() == -11);
  FE t = i * s;  // sqrt(11)
  CHECK((t * t).rational() == 11);
  CHECK(F->contains_sqrt(11));
  FE u = F->sqrt_of(11);
  CHECK(u * u == t * t);
  // (1 + i)^4 = -4
  FE x = i + Rat(1);
  CHECK(x.pow(4).rational() == -4);
  // inverse round trip
  FE y = (i * Rat(3) + s * Rat(2) + Rat(5));
  CHECK((y * y.inv()).rational() == 1);
  // sqrt of non-member rejected
  CHECK(!F->contains_sqrt(7));
  CHECK_THROWS_AS((void)F->sqrt_of(7), MathError);
  // sqrt with square cofactor
  FE v = F->sqrt_of(-44);  // 2 sqrt(-11)
  CHECK(v == s * Rat(2));
}

TEST_CASE("dependent generators are folded") {
  auto F = NumberField::make({Int(-4), Int(-9), Int(36)});
  // squarefree parts: -1, -1, 1 -> only sqrt(-1) survives
  CHECK(F->degree() == 2);
  CHECK(F->sqrt_of(-9) == F->sqrt_of(-1) * Rat(3));
}

TEST_CASE("lambda place valuations") {
  auto F = NumberField::make({Int(-1), Int(-11)});
  // 37 splits: (-1/37) = 1 (37 = 1 mod 4), (-11/37) = 1
  auto L = F->lambda_place(37, 12);
  FE i = F->sqrt_of(-1);
  FE x = (i + Rat(6)) * Rat(37 * 37);
  long v = F->valuation(x, L);
  // i = ±6 mod 37, so i + 6 may be a unit or have valuation 1
  CHECK(v >= 2);
  CHECK(v <= 3);
  CHECK(F->valuation(F->from_rational(Rat(37)), L) == 1);
  CHECK(F->valuation(F->from_rational(make_rat(5, 37)), L) == -1);
  CHECK(F->valuation(F->zero(), L) == LambdaPlace::VAL_INF);
  // residues multiply
  FE a = i * Rat(2) + Rat(1), b = i * Rat(5) + Rat(3);
  Int ra = F->residue(a, L), rb = F->residue(b, L), rab = F->residue(a * b, L);
  CHECK(ra * rb % 37 == rab);
  CHECK_THROWS_AS((void)F->lambda_place(7, 6), MathError);  // -1 non-residue
}
