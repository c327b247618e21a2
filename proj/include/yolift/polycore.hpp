#pragma once

#include <array>
#include <cassert>
#include <vector>

#include "yolift/rat.hpp"

namespace yolift {

// Variable pairs: (X1,Y1), (X2,Y2) and the extra (X,Y) slot.
enum VarTag : int { V1 = 1, V2 = 2, VW = 3 };

template <class K>
struct TMat2 {
  K a, b, c, d;  // [[a,b],[c,d]]

  TMat2 mul(const TMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  // main involution [[d,-b],[-c,a]]
  TMat2 star() const { return {d, -b, -c, a}; }
  K trace() const { return a + d; }
  K det() const { return a * d - b * c; }
  TMat2 sub(const TMat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  TMat2 add(const TMat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  TMat2 scale(const K& s) const { return {a * s, b * s, c * s, d * s}; }
};

// Tensor of homogeneous polynomials in up to three variable pairs, dense.
// Index i_f in factor f is the X-exponent of the monomial X^i Y^(deg-i).
template <class K>
struct TPoly {
  std::vector<std::pair<int, int>> factors;  // (tag, degree)
  std::vector<K> c;

  static TPoly zero(std::vector<std::pair<int, int>> fs) {
    TPoly P;
    P.factors = std::move(fs);
    size_t n = 1;
    for (auto& [t, d] : P.factors) n *= size_t(d + 1);
    P.c.assign(n, K());
    return P;
  }
  static TPoly constant(const K& v) {
    TPoly P;
    P.c = {v};
    return P;
  }

  size_t size() const { return c.size(); }
  int deg(size_t f) const { return factors[f].second; }

  size_t stride(size_t f) const {
    size_t s = 1;
    for (size_t g = f + 1; g < factors.size(); ++g) s *= size_t(deg(g) + 1);
    return s;
  }

  bool same_shape(const TPoly& o) const { return factors == o.factors; }

  TPoly operator+(const TPoly& o) const {
    assert(same_shape(o));
    TPoly r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    return r;
  }
  TPoly operator-(const TPoly& o) const {
    assert(same_shape(o));
    TPoly r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
    return r;
  }
  TPoly scaled(const K& s) const {
    TPoly r = *this;
    for (auto& x : r.c) x = x * s;
    return r;
  }

  // graded product: factor tags must agree pairwise, degrees add
  TPoly operator*(const TPoly& o) const {
    assert(factors.size() == o.factors.size());
    TPoly r;
    r.factors = factors;
    for (size_t f = 0; f < factors.size(); ++f) {
      assert(factors[f].first == o.factors[f].first);
      r.factors[f].second += o.factors[f].second;
    }
    size_t n = 1;
    for (auto& [t, d] : r.factors) n *= size_t(d + 1);
    r.c.assign(n, K());
    size_t nf = factors.size();
    std::vector<int> ia(nf, 0), ib(nf, 0);
    for (size_t p = 0; p < c.size(); ++p) {
      // decode p
      {
        size_t rem = p;
        for (size_t f = 0; f < nf; ++f) {
          size_t st = stride(f);
          ia[f] = int(rem / st);
          rem %= st;
        }
      }
      for (size_t q = 0; q < o.c.size(); ++q) {
        size_t rem = q;
        for (size_t f = 0; f < nf; ++f) {
          size_t st = o.stride(f);
          ib[f] = int(rem / st);
          rem %= st;
        }
        size_t idx = 0;
        for (size_t f = 0; f < nf; ++f) {
          size_t st = 1;
          for (size_t g = f + 1; g < nf; ++g) st *= size_t(r.factors[g].second + 1);
          idx += size_t(ia[f] + ib[f]) * st;
        }
        r.c[idx] = r.c[idx] + c[p] * o.c[q];
      }
    }
    return r;
  }

  TPoly pow(int e) const {
    assert(e >= 0);
    std::vector<std::pair<int, int>> zf = factors;
    for (auto& [t, d] : zf) d = 0;
    TPoly r = zero(zf);
    r.c[0] = K(Rat(1));
    TPoly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      if (e > 1) b = b * b;
      e >>= 1;
    }
    return r;
  }

  // tensor with disjoint trailing factors
  TPoly tensor(const TPoly& o) const {
    TPoly r;
    r.factors = factors;
    for (auto& f : o.factors) r.factors.push_back(f);
    r.c.assign(c.size() * o.c.size(), K());
    for (size_t p = 0; p < c.size(); ++p)
      for (size_t q = 0; q < o.c.size(); ++q)
        r.c[p * o.c.size() + q] = c[p] * o.c[q];
    return r;
  }
};

// -bX1^2 + 2aX1Y1 + cY1^2 for traceless [[a,b],[c,-a]]; single factor (tag,2)
template <class K>
TPoly<K> poly_p_t(const TMat2<K>& x, int tag = V1) {
  TPoly<K> P = TPoly<K>::zero({{tag, 2}});
  P.c[0] = x.c;                    // Y^2
  P.c[1] = x.a * K(Rat(2));        // XY
  P.c[2] = -x.b;                   // X^2
  return P;
}

// Tr(x* J W): bidegree (1,1) in (X1,Y1) x (X2,Y2)
template <class K>
TPoly<K> poly_q_t(const TMat2<K>& x) {
  TMat2<K> J{K(), K(Rat(1)), K(Rat(-1)), K()};
  TMat2<K> m = x.star().mul(J);
  TPoly<K> P = TPoly<K>::zero({{V1, 1}, {V2, 1}});
  // index = i1*(deg2+1) + i2, i = X-exponent
  P.c[1 * 2 + 1] = m.a;  // X1 X2
  P.c[0 * 2 + 1] = m.b;  // Y1 X2
  P.c[1 * 2 + 0] = m.c;  // X1 Y2
  P.c[0 * 2 + 0] = m.d;  // Y1 Y2
  return P;
}

// 2^(k1-k2) * P^alpha_k(x1,x2); integral over any ring containing the entries
template <class K>
TPoly<K> poly_P_alpha_scaled_t(const TMat2<K>& x1, const TMat2<K>& x2, int alpha,
                               int k1, int k2) {
  TMat2<K> m = x1.mul(x2.star());
  K t = m.trace();
  TMat2<K> n = m.add(m).sub(TMat2<K>{t, K(), K(), t});  // 2*m - Tr(m)*1
  TPoly<K> pn = poly_p_t(n);
  // lift to the (V1,V2) shape
  TPoly<K> pbase = TPoly<K>::zero({{V1, 2}, {V2, 0}});
  for (int i = 0; i <= 2; ++i) pbase.c[i] = pn.c[i];
  TPoly<K> q1 = poly_q_t(x1), q2 = poly_q_t(x2);
  return pbase.pow(k1 - k2) * q1.pow(alpha) * q2.pow(2 * k2 - alpha);
}

// 2^(k1-k2) * P_k(x1,x2), tridegree (2k1, 2k2, 2k2) in (V1, V2, VW)
template <class K>
TPoly<K> poly_P_k_scaled_t(const TMat2<K>& x1, const TMat2<K>& x2, int k1,
                           int k2) {
  TPoly<K> acc = TPoly<K>::zero({{V1, 2 * k1}, {V2, 2 * k2}, {VW, 2 * k2}});
  for (int alpha = 0; alpha <= 2 * k2; ++alpha) {
    TPoly<K> pa = poly_P_alpha_scaled_t(x1, x2, alpha, k1, k2);
    TPoly<K> w = TPoly<K>::zero({{VW, 2 * k2}});
    w.c[alpha] = K(Rat(binomial(2 * k2, alpha)));
    acc = acc + pa.tensor(w);
  }
  return acc;
}

}  // namespace yolift
