#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yolift/poly.hpp"

using namespace yolift;

namespace {

std::mt19937_64 rng(20240811);

Rat rnd_rat(int span = 6) {
  std::uniform_int_distribution<int> d(-span, span);
  int num = d(rng);
  int den = 1 + std::abs(d(rng)) % 3;
  return make_rat(num, den);
}

Mat2 rnd_mat_invertible() {
  while (true) {
    Mat2 m = mat2_rational(rnd_rat(), rnd_rat(), rnd_rat(), rnd_rat());
    if (!m.det().is_zero()) return m;
  }
}

PolyVec rnd_poly(int tag, int deg) {
  PolyVec P = PolyVec::zero({{tag, deg}});
  for (auto& c : P.c) c = FE(rnd_rat());
  return P;
}

}  // namespace

TEST_CASE("pairing basics") {
  // <X^2, Y^2>_2 = 1, <XY, XY>_2 = -1/2, <X^2, X^2>_2 = 0
  PolyVec x2 = monomial(V1, 2, 2, FE(Rat(1)));
  PolyVec y2 = monomial(V1, 2, 0, FE(Rat(1)));
  PolyVec xy = monomial(V1, 2, 1, FE(Rat(1)));
  CHECK(pairing_n(x2, y2).rational() == 1);
  CHECK(pairing_n(xy, xy).rational() == make_rat(-1, 2));
  CHECK(pairing_n(x2, x2).is_zero());
}

TEST_CASE("pairing is perfect up to degree 10") {
  for (int n = 0; n <= 10; ++n) {
    // Gram determinant of the monomial basis is nonzero: the pairing matrix is
    // antidiagonal with entries (-1)^i / binom(n,i)
    Rat det(1);
    for (int i = 0; i <= n; ++i) det *= Rat((i % 2) ? -1 : 1) / Rat(binomial(n, i));
    CHECK(det != 0);
    // and a functional vanishing against everything is zero
    PolyVec P = rnd_poly(V1, n);
    bool all_zero = true;
    for (int j = 0; j <= n; ++j)
      if (!pairing_n(P, monomial(V1, n, j, FE(Rat(1)))).is_zero()) all_zero = false;
    bool pzero = true;
    for (auto& c : P.c)
      if (!c.is_zero()) pzero = false;
    CHECK(all_zero == pzero);
  }
}

TEST_CASE("rho_kappa equivariance of the pairing") {
  // <rho(g)v, rho(g)w> = det(g)^(n+2b) <v,w>
  for (int n : {1, 2, 3, 5, 8, 10}) {
    for (int b : {0, -1, 2}) {
      for (int trial = 0; trial < 12; ++trial) {
        Mat2 g = rnd_mat_invertible();
        PolyVec v = rnd_poly(VW, n), w = rnd_poly(VW, n);
        FE lhs = pairing_n(rho_kappa(v, g, b), rho_kappa(w, g, b));
        FE rhs = g.det().pow(n + 2 * b) * pairing_n(v, w);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("rho is a homomorphism for the right substitution action") {
  for (int trial = 0; trial < 10; ++trial) {
    Mat2 g = rnd_mat_invertible(), h = rnd_mat_invertible();
    PolyVec v = rnd_poly(VW, 4);
    PolyVec lhs = rho_kappa(rho_kappa(v, h, 1), g, 1);
    PolyVec rhs = rho_kappa(v, g.mul(h), 1);
    for (size_t i = 0; i < lhs.c.size(); ++i) CHECK(lhs.c[i] == rhs.c[i]);
  }
}

TEST_CASE("scalars act trivially through tau_k") {
  PolyVec v = rnd_poly(V1, 6);
  Mat2 t = mat2_rational(make_rat(3, 2), 0, 0, make_rat(3, 2));
  PolyVec w = tau_k(v, t, 3);
  for (size_t i = 0; i < v.c.size(); ++i) CHECK(v.c[i] == w.c[i]);
  // identity acts trivially with any weight
  PolyVec u = rho_kappa(rnd_poly(VW, 4), mat2_identity(), 5);
}

TEST_CASE("special polynomial p") {
  Mat2 x = mat2_rational(1, 0, 0, -1);
  PolyVec p = poly_p(x);  // 2 X1 Y1
  CHECK(p.c[1].rational() == 2);
  CHECK(p.c[0].is_zero());
  CHECK(p.c[2].is_zero());
  Mat2 y = mat2_rational(0, 1, 0, 0);
  PolyVec py = poly_p(y);  // -X1^2
  CHECK(py.c[2].rational() == -1);
  CHECK(py.c[1].is_zero());
  CHECK(py.c[0].is_zero());
  CHECK_THROWS_AS((void)poly_p(mat2_rational(1, 0, 0, 1)), MathError);
}

TEST_CASE("p equivariance: p(g x g^-1) = tau_1(g) p(x)") {
  for (int trial = 0; trial < 30; ++trial) {
    Mat2 g = rnd_mat_invertible();
    Mat2 x = mat2_rational(rnd_rat(), rnd_rat(), rnd_rat(), 0);
    x.d = -x.a;  // traceless
    PolyVec lhs = poly_p(g.mul(x).mul(mat2_inv(g)));
    PolyVec rhs = tau_k(poly_p(x), g, 1);
    for (size_t i = 0; i < lhs.c.size(); ++i) CHECK(lhs.c[i] == rhs.c[i]);
  }
}

TEST_CASE("special polynomial q") {
  // q(1) = Y1 X2 - X1 Y2
  PolyVec q1 = poly_q(mat2_identity());
  CHECK(q1.c[0 * 2 + 1].rational() == 1);   // Y1 X2
  CHECK(q1.c[1 * 2 + 0].rational() == -1);  // X1 Y2
  CHECK(q1.c[1 * 2 + 1].is_zero());
  CHECK(q1.c[0 * 2 + 0].is_zero());
  // q(0) = 0
  PolyVec q0 = poly_q(mat2_rational(0, 0, 0, 0));
  for (auto& c : q0.c) CHECK(c.is_zero());
  // q([[0,1],[-1,0]]) = X1 X2 + Y1 Y2
  PolyVec qj = poly_q(mat2_rational(0, 1, -1, 0));
  CHECK(qj.c[1 * 2 + 1].rational() == 1);
  CHECK(qj.c[0 * 2 + 0].rational() == 1);
  CHECK(qj.c[0 * 2 + 1].is_zero());
  CHECK(qj.c[1 * 2 + 0].is_zero());
}

TEST_CASE("P_alpha small cases") {
  // k1 = k2 = 0: the empty product is the constant 1
  PolyVec c = poly_P_alpha(mat2_identity(), mat2_identity(), 0, 0, 0);
  CHECK(c.c.size() == 1);
  CHECK(c.c[0].rational() == 1);
  CHECK_THROWS_AS((void)poly_P_alpha(mat2_identity(), mat2_identity(), 3, 1, 1),
                  MathError);
  // k1=1, k2=0 with x1 = 1, x2 = diag(i,-i): P = p(x1 x2^* - ...) = -2i X1Y1
  auto F = NumberField::make({Int(-1)});
  FE i = F->sqrt_of(-1);
  Mat2 x2{i, F->zero(), F->zero(), -i};
  PolyVec P = poly_P_alpha(mat2_identity(), x2, 0, 1, 0);
  CHECK(P.c.size() == 3);
  CHECK(P.c[1] == -(i + i));
}

TEST_CASE("P_k torus value used by the Bessel normalization") {
  // <P_k(1, diag(i,-i)), (X^2+Y^2)^{k2}>_{2k2} = (-2i)^{k1+k2} (X1Y1)^{k1} (X2Y2)^{k2}
  auto F = NumberField::make({Int(-1)});
  FE i = F->sqrt_of(-1);
  Mat2 one = mat2_identity();
  Mat2 d{i, F->zero(), F->zero(), -i};
  for (auto [k1, k2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1},
                                                        {2, 1}, {3, 2}, {5, 3}}) {
    PolyVec P = poly_P_k(one, d, k1, k2);
    PolyVec x2y2 = PolyVec::zero({{VW, 2}});
    x2y2.c[2] = FE(Rat(1));
    x2y2.c[0] = FE(Rat(1));
    PolyVec paired = pair_partial(P, x2y2.pow(k2));
    FE expect = (-(i + i)).pow(k1 + k2);
    for (size_t idx = 0; idx < paired.c.size(); ++idx) {
      // only the (X1Y1)^k1 (X2Y2)^k2 slot survives
      size_t mid = size_t(k1) * paired.stride(0) + size_t(k2) * paired.stride(1);
      if (idx == mid)
        CHECK(paired.c[idx] == expect);
      else
        CHECK(paired.c[idx].is_zero());
    }
  }
}

TEST_CASE("Q_S polynomial and scale") {
  auto F = NumberField::make({Int(-3)});
  // S = [[1,1/2],[1/2,1]], k1=k2=0: scale = (det S)^-1 = 4/3
  QSPoly qs = poly_Q_S(Rat(1), Rat(1), Rat(1), 0, 0, F);
  CHECK(qs.scale == F->from_rational(make_rat(4, 3)));
  // S = 1_2, k1=k2=1: (X^2+Y^2) with scale (det)^-2 = 1
  auto Q = NumberField::rationals();
  QSPoly qs2 = poly_Q_S(Rat(1), Rat(0), Rat(1), 1, 1, Q);
  CHECK(qs2.poly.c[2].rational() == 1);
  CHECK(qs2.poly.c[1].is_zero());
  CHECK(qs2.poly.c[0].rational() == 1);
  CHECK(qs2.scale.rational() == 1);
  // odd k1+k2 requires sqrt(det S) in the field
  auto F11 = NumberField::make({Int(-11)});
  // det = 11/4 for S_z of Q(sqrt(-11)); sqrt(11) not in Q(sqrt(-11))
  CHECK_THROWS_AS((void)poly_Q_S(Rat(1), Rat(1), Rat(3), 1, 0, F11), MathError);
  auto F2 = NumberField::make({Int(-1), Int(-11)});
  QSPoly qs3 = poly_Q_S(Rat(1), Rat(1), Rat(3), 1, 0, F2);
  CHECK(qs3.scale.pow(2) == F2->from_rational(make_rat(4, 11)).pow(3));
}

TEST_CASE("pluriharmonicity for small weights") {
  CHECK(pluriharmonic_check(0, 0));
  CHECK(pluriharmonic_check(1, 0));
  CHECK(pluriharmonic_check(2, 2));
}

TEST_CASE("integral coefficients") {
  CHECK(integrality_check(1, 0));
  CHECK(integrality_check(2, 1));
  CHECK(integrality_check(2, 2));
}
