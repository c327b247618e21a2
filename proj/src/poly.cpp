#include "yolift/poly.hpp"

namespace yolift {

Mat2 mat2_rational(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return Mat2{FE(a), FE(b), FE(c), FE(d)};
}

Mat2 mat2_identity() { return mat2_rational(1, 0, 0, 1); }

Mat2 mat2_inv(const Mat2& m) {
  FE det = m.det();
  if (det.is_zero()) throw MathError("mat2_inv: singular");
  FE dinv = det.inv();
  return Mat2{m.d * dinv, -m.b * dinv, -m.c * dinv, m.a * dinv};
}

Mat2 mat2_transpose(const Mat2& m) { return Mat2{m.a, m.c, m.b, m.d}; }

FE pairing_n(const PolyVec& P, const PolyVec& Q) {
  if (P.factors.size() != 1 || !P.same_shape(Q))
    throw MathError("pairing_n: shape mismatch");
  int n = P.factors[0].second;
  FE acc;
  for (int i = 0; i <= n; ++i) {
    if (P.c[i].is_zero() || Q.c[n - i].is_zero()) continue;
    Rat w = Rat((i % 2) ? -1 : 1) / Rat(binomial(n, i));
    acc = acc + P.c[i] * Q.c[n - i] * w;
  }
  return acc;
}

PolyVec pair_partial(const PolyVec& A, const PolyVec& B) {
  // locate B's factors inside A by tag
  std::vector<size_t> pos;
  std::vector<bool> used(A.factors.size(), false);
  for (auto& [tag, deg] : B.factors) {
    bool found = false;
    for (size_t f = 0; f < A.factors.size(); ++f) {
      if (!used[f] && A.factors[f].first == tag) {
        if (A.factors[f].second != deg)
          throw MathError("pair_partial: degree mismatch");
        pos.push_back(f);
        used[f] = true;
        found = true;
        break;
      }
    }
    if (!found) throw MathError("pair_partial: missing factor");
  }
  std::vector<size_t> keep;
  for (size_t f = 0; f < A.factors.size(); ++f)
    if (!used[f]) keep.push_back(f);

  PolyVec R;
  for (size_t f : keep) R.factors.push_back(A.factors[f]);
  size_t rn = 1;
  for (auto& [t, d] : R.factors) rn *= size_t(d + 1);
  R.c.assign(rn, FE());

  size_t nf = A.factors.size();
  std::vector<int> ia(nf);
  for (size_t p = 0; p < A.c.size(); ++p) {
    if (A.c[p].is_zero()) continue;
    size_t rem = p;
    for (size_t f = 0; f < nf; ++f) {
      size_t st = A.stride(f);
      ia[f] = int(rem / st);
      rem %= st;
    }
    // matching B index: complementary exponents
    size_t bidx = 0;
    Rat w(1);
    bool skip = false;
    for (size_t bf = 0; bf < pos.size(); ++bf) {
      int n = B.factors[bf].second;
      int i = ia[pos[bf]];
      bidx += size_t(n - i) * B.stride(bf);
      w *= Rat((i % 2) ? -1 : 1) / Rat(binomial(n, i));
      (void)skip;
    }
    if (B.c[bidx].is_zero()) continue;
    size_t ridx = 0;
    for (size_t kf = 0; kf < keep.size(); ++kf) {
      size_t st = 1;
      for (size_t g = kf + 1; g < keep.size(); ++g)
        st *= size_t(R.factors[g].second + 1);
      ridx += size_t(ia[keep[kf]]) * st;
    }
    R.c[ridx] = R.c[ridx] + A.c[p] * B.c[bidx] * w;
  }
  return R;
}

PolyVec rho_apply(const PolyVec& P, int tag, const Mat2& g, int detpow) {
  PolyVec R = P;
  for (size_t f = 0; f < P.factors.size(); ++f) {
    if (P.factors[f].first != tag) continue;
    int d = P.factors[f].second;
    // substitution matrix: column i = coefficients of (g11 X + g21 Y)^i (g12 X + g22 Y)^(d-i)
    std::vector<std::vector<FE>> M(d + 1, std::vector<FE>(d + 1, FE()));
    for (int i = 0; i <= d; ++i) {
      // expand product of two binomial powers
      std::vector<FE> first(i + 1, FE()), second(d - i + 1, FE());
      for (int s = 0; s <= i; ++s)
        first[s] = g.a.pow(s) * g.c.pow(i - s) * Rat(binomial(i, s));
      for (int s = 0; s <= d - i; ++s)
        second[s] = g.b.pow(s) * g.d.pow(d - i - s) * Rat(binomial(d - i, s));
      for (int s = 0; s <= i; ++s)
        for (int u = 0; u <= d - i; ++u)
          M[s + u][i] = M[s + u][i] + first[s] * second[u];
    }
    size_t st = P.stride(f);
    size_t block = st * size_t(d + 1);
    std::vector<FE> out(R.c.size(), FE());
    for (size_t base = 0; base < R.c.size(); base += block)
      for (size_t off = 0; off < st; ++off)
        for (int i = 0; i <= d; ++i) {
          const FE& src = R.c[base + size_t(i) * st + off];
          if (src.is_zero()) continue;
          for (int j = 0; j <= d; ++j) {
            if (M[j][i].is_zero()) continue;
            size_t idx = base + size_t(j) * st + off;
            out[idx] = out[idx] + M[j][i] * src;
          }
        }
    R.c = std::move(out);
  }
  if (detpow != 0) {
    FE dp = g.det().pow(detpow);
    for (auto& x : R.c) x = x * dp;
  }
  return R;
}

PolyVec rho_kappa(const PolyVec& P, const Mat2& g, int b) {
  if (P.factors.size() != 1) throw MathError("rho_kappa: single factor expected");
  return rho_apply(P, P.factors[0].first, g, b);
}

PolyVec tau_k(const PolyVec& v, const Mat2& g, int k) {
  if (v.factors.size() != 1 || v.factors[0].second != 2 * k)
    throw MathError("tau_k: wrong shape");
  return rho_apply(v, v.factors[0].first, g, -k);
}

PolyVec poly_p(const Mat2& x) {
  if (!x.trace().is_zero()) throw MathError("poly_p: trace must vanish");
  return poly_p_t(x);
}

PolyVec poly_q(const Mat2& x) { return poly_q_t(x); }

PolyVec poly_P_alpha(const Mat2& x1, const Mat2& x2, int alpha, int k1, int k2) {
  if (alpha < 0 || alpha > 2 * k2 || k2 > k1)
    throw MathError("poly_P_alpha: bad parameters");
  PolyVec P = poly_P_alpha_scaled_t(x1, x2, alpha, k1, k2);
  return P.scaled(FE(Rat(1) / Rat(ipow(2, k1 - k2))));
}

PolyVec poly_P_k(const Mat2& x1, const Mat2& x2, int k1, int k2) {
  if (k2 > k1 || k2 < 0) throw MathError("poly_P_k: need 0 <= k2 <= k1");
  PolyVec P = poly_P_k_scaled_t(x1, x2, k1, k2);
  return P.scaled(FE(Rat(1) / Rat(ipow(2, k1 - k2))));
}

PolyVec monomial(int tag, int deg, int xexp, const FE& coeff) {
  PolyVec P = PolyVec::zero({{tag, deg}});
  P.c[xexp] = coeff;
  return P;
}

PolyVec xy_power(int tag, int k) {
  return monomial(tag, 2 * k, k, FE(Rat(1)));
}

QSPoly poly_Q_S(const Rat& a, const Rat& b, const Rat& c, int k1, int k2,
                const FieldPtr& F) {
  Rat det = a * c - b * b / 4;
  if (det <= 0) throw MathError("poly_Q_S: S must be nonsingular");
  QSPoly out;
  PolyVec quad = PolyVec::zero({{VW, 2}});
  quad.c[2] = FE(a);
  quad.c[1] = FE(b);
  quad.c[0] = FE(c);
  out.poly = quad.pow(k2);
  int e = k1 + k2 + 2;
  if (e % 2 == 0) {
    out.scale = FE(Rat(1)).in(F) / FE(det).pow(e / 2).in(F);
  } else {
    // need sqrt(det) in the field: det = num/den, sqrt = sqrt(num*den)/den
    Int num = det.get_num(), den = det.get_den();
    FE sq = F->sqrt_of(num * den) * Rat(1, den);
    out.scale = sq.pow(e).inv();
  }
  return out;
}

// ---------------- symbolic layer ----------------

MPoly MPoly::var(int i) {
  MPoly m;
  Key k{};
  k[i] = 1;
  m.t[k] = 1;
  return m;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (auto& [k, v] : o.t) {
    auto it = r.t.find(k);
    if (it == r.t.end())
      r.t[k] = v;
    else {
      it->second += v;
      if (it->second == 0) r.t.erase(it);
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [k, v] : r.t) v = -v;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (auto& [k1, v1] : t)
    for (auto& [k2, v2] : o.t) {
      Key k;
      for (int i = 0; i < 8; ++i) k[i] = int8_t(k1[i] + k2[i]);
      auto it = r.t.find(k);
      if (it == r.t.end())
        r.t[k] = v1 * v2;
      else {
        it->second += v1 * v2;
        if (it->second == 0) r.t.erase(it);
      }
    }
  return r;
}

MPoly MPoly::operator*(const Rat& q) const {
  if (q == 0) return MPoly();
  MPoly r = *this;
  for (auto& [k, v] : r.t) v *= q;
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly r;
  for (auto& [k, v] : t) {
    if (k[i] == 0) continue;
    Key kk = k;
    kk[i] = int8_t(kk[i] - 1);
    r.t[kk] = v * Rat(int(k[i]));
  }
  return r;
}

// variables: 0 z1, 1 zb1, 2 w1, 3 wb1, 4 z2, 5 zb2, 6 w2, 7 wb2
TPoly<MPoly> poly_P_k_symbolic(int k1, int k2) {
  auto v = [](int i) { return MPoly::var(i); };
  TMat2<MPoly> x1{v(0), v(2), -v(3), v(1)};
  TMat2<MPoly> x2{v(4), v(6), -v(7), v(5)};
  return poly_P_k_scaled_t(x1, x2, k1, k2);
}

bool pluriharmonic_check(int k1, int k2) {
  TPoly<MPoly> P = poly_P_k_symbolic(k1, k2);
  auto lap = [&](const MPoly& f, int a, int b, int c, int d) {
    return f.derivative(a).derivative(b) + f.derivative(c).derivative(d);
  };
  for (const MPoly& f : P.c) {
    if (!lap(f, 0, 1, 2, 3).is_zero()) return false;                 // Delta_11
    if (!lap(f, 4, 5, 6, 7).is_zero()) return false;                 // Delta_22
    MPoly d12 = f.derivative(0).derivative(5) + f.derivative(1).derivative(4) +
                f.derivative(2).derivative(7) + f.derivative(3).derivative(6);
    if (!d12.is_zero()) return false;                                // Delta_12
  }
  return true;
}

bool integrality_check(int k1, int k2) {
  TPoly<MPoly> P = poly_P_k_symbolic(k1, k2);
  Rat scale = Rat(1) / Rat(ipow(2, k1 - k2));
  for (const MPoly& f : P.c)
    for (auto& [k, v] : f.t)
      if (Rat(v * scale).get_den() != 1) return false;
  return true;
}

}  // namespace yolift
