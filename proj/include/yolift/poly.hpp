#pragma once

#include <map>

#include "yolift/numfield.hpp"
#include "yolift/polycore.hpp"

namespace yolift {

using Mat2 = TMat2<FE>;
using PolyVec = TPoly<FE>;

Mat2 mat2_rational(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
Mat2 mat2_identity();
Mat2 mat2_inv(const Mat2& m);
Mat2 mat2_transpose(const Mat2& m);

// <X^i Y^(n-i), X^j Y^(n-j)>_n = (-1)^i binom(n,i)^{-1} when i+j = n
FE pairing_n(const PolyVec& P, const PolyVec& Q);

// contract the factors of B against the identically tagged factors of A;
// remaining factors of A survive
PolyVec pair_partial(const PolyVec& A, const PolyVec& B);

// substitute (X,Y) -> (X,Y) g in every factor with the given tag and multiply
// by det(g)^detpow
PolyVec rho_apply(const PolyVec& P, int tag, const Mat2& g, int detpow);
// weight-kappa action on a single-factor (VW) vector: kappa = (n+b, b)
PolyVec rho_kappa(const PolyVec& P, const Mat2& g, int b);
// tau_k = rho_(k,-k) on a single factor of degree 2k
PolyVec tau_k(const PolyVec& v, const Mat2& g, int k);

PolyVec poly_p(const Mat2& x);               // traceless x
PolyVec poly_q(const Mat2& x);
PolyVec poly_P_alpha(const Mat2& x1, const Mat2& x2, int alpha, int k1, int k2);
PolyVec poly_P_k(const Mat2& x1, const Mat2& x2, int k1, int k2);

// monomial basis vectors
PolyVec monomial(int tag, int deg, int xexp, const FE& coeff);
PolyVec xy_power(int tag, int k);  // (XY)^k as element of degree 2k

// (X^2 + b XY + c Y^2)^k2 together with (det S)^{-(k1+k2+2)/2} as a scalar;
// S = [[a, b/2],[b/2, c]]
struct QSPoly {
  PolyVec poly;   // single VW factor of degree 2k2
  FE scale;
};
QSPoly poly_Q_S(const Rat& a, const Rat& b, const Rat& c, int k1, int k2,
                const FieldPtr& F);

// ---- symbolic layer for the pluriharmonicity and integrality checks ----

// sparse polynomial in z1, zb1, w1, wb1, z2, zb2, w2, wb2 over Q
struct MPoly {
  using Key = std::array<int8_t, 8>;
  std::map<Key, Rat> t;

  MPoly() = default;
  explicit MPoly(const Rat& q) {
    if (q != 0) t[Key{}] = q;
  }
  static MPoly var(int i);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& q) const;
  bool operator==(const MPoly& o) const { return t == o.t; }
  bool is_zero() const { return t.empty(); }

  MPoly derivative(int i) const;
};

// 2^(k1-k2) P_k evaluated on generic quaternion-shaped matrices
TPoly<MPoly> poly_P_k_symbolic(int k1, int k2);
// Delta_11, Delta_22, Delta_12 all annihilate P_k
bool pluriharmonic_check(int k1, int k2);
// all coefficients of P_k are integer polynomials in the entries
bool integrality_check(int k1, int k2);

}  // namespace yolift
