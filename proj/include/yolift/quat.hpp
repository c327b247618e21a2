#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "yolift/rat.hpp"

namespace yolift {

// quaternion with coordinates over 1, i, j, ij
struct Quat {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  static Quat basis(int k) {
    Quat q;
    q.c[k] = 1;
    return q;
  }
  static Quat scalar(const Rat& r) {
    Quat q;
    q.c[0] = r;
    return q;
  }
  Quat operator+(const Quat& o) const {
    Quat r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] + o.c[k];
    return r;
  }
  Quat operator-(const Quat& o) const {
    Quat r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] - o.c[k];
    return r;
  }
  Quat operator*(const Rat& s) const {
    Quat r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] * s;
    return r;
  }
  bool operator==(const Quat& o) const { return c == o.c; }
  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }
};

// presentation i^2 = a, j^2 = b, ij = -ji, definite (a, b < 0)
struct Algebra {
  Int a{-1}, b{-1};
  Int Nminus{2};

  Quat mul(const Quat& x, const Quat& y) const;
  Quat conj(const Quat& x) const {
    return Quat{{x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
  }
  Rat tr(const Quat& x) const { return 2 * x.c[0]; }
  Rat norm(const Quat& x) const {
    return x.c[0] * x.c[0] - Rat(a) * x.c[1] * x.c[1] - Rat(b) * x.c[2] * x.c[2] +
           Rat(a * b) * x.c[3] * x.c[3];
  }
  // bilinear form (x,y) = n(x+y) - n(x) - n(y) = Tr(x conj(y))
  Rat bil(const Quat& x, const Quat& y) const {
    return tr(mul(x, conj(y)));
  }
  Quat inv(const Quat& x) const {
    Rat n = norm(x);
    if (n == 0) throw MathError("Quat inverse of zero");
    return conj(x) * (Rat(1) / n);
  }
};

// full-rank lattice: rows m[i]/den are coordinates over 1,i,j,ij
struct Lat {
  std::array<std::array<Int, 4>, 4> m;
  Int den{1};
  bool operator==(const Lat& o) const { return m == o.m && den == o.den; }
};

Lat lat_from_rows(std::vector<std::array<Rat, 4>> rows);
Quat lat_basis(const Lat& L, int i);
bool lat_contains(const Lat& L, const Quat& x);
std::array<Rat, 4> lat_coords(const Lat& L, const Quat& x);  // x in basis of L
Lat lat_add(const Lat& A, const Lat& B);
Lat lat_mul(const Algebra& Alg, const Lat& A, const Lat& B);
Lat lat_intersect(const Lat& A, const Lat& B);
Lat lat_scale(const Lat& A, const Rat& s);
Lat lat_left_mul(const Algebra& Alg, const Quat& x, const Lat& A);
Lat lat_conj(const Algebra& Alg, const Lat& A);
Lat left_order(const Algebra& Alg, const Lat& I);
Rat lat_index(const Lat& sub, const Lat& sup);  // [sup : sub]
Rat norm_content(const Algebra& Alg, const Lat& L);
// reduced discriminant sqrt(|det Trd(b_i b_j)|); exact or throws
Rat reduced_disc(const Algebra& Alg, const Lat& L);

// integer coordinate vectors x (w.r.t. the basis of L) with n-value <= bound
struct ShortVec {
  std::array<long, 4> x;
  Rat value;
};
std::vector<ShortVec> short_vectors(const Algebra& Alg, const Lat& L,
                                    const Rat& bound);
Quat shortvec_to_quat(const Lat& L, const std::array<long, 4>& x);

// splitting D0 tensor Qp = M2(Qp) mapping the maximal order onto M2(Zp)
struct LocalSplitting {
  long p = 0;
  int prec = 0;
  Int pm;                                  // p^prec
  std::array<std::array<Int, 4>, 4> img;   // matrix entries (row major) of O-basis
  std::array<std::array<Int, 4>, 4> pre;   // O-basis coords of E11,E12,E21,E22

  // matrix of an element with p-integral coordinates over the order basis
  std::array<Int, 4> mat_of(const std::array<Rat, 4>& ocoords) const;
  // order-basis coordinates (mod pm) of an integral matrix
  std::array<Int, 4> coords_of(const std::array<Int, 4>& mat) const;
};

class QuatContext {
 public:
  QuatContext(long Nminus, long Nplus, int prec = 40);

  Algebra A;
  long Nminus, Nplus;
  Lat Omax, R;

  const LocalSplitting& split(long p) const;

  struct ClassRep {
    Lat I;
    Rat content;
    Lat left_ord;
    std::vector<Quat> units;  // all norm-one units of the left order
    long w = 0;               // |units| / 2
    std::vector<long> theta;  // theta-series prefix of the normalized form
  };
  const std::vector<ClassRep>& class_set() const;
  long class_number() const { return long(class_set().size()); }
  Rat mass() const;
  Rat mass_formula() const;

  // right ideal class: J = gamma * I_idx exactly, gamma in D0^x
  std::pair<int, Quat> identify_class(const Lat& J) const;

  std::vector<Lat> neighbors(const Lat& I, long p) const;

  Quat uniformizer(long p) const;  // p | N^-, reduced norm p

  struct Embedding {
    Int dK;     // K = Q(sqrt(-dK)), dK > 0 squarefree
    Quat root;  // image of sqrt(-dK): trace 0, norm dK
    Quat delta; // image of the standard maximal-order generator
  };
  Embedding optimal_embedding(const Int& dK) const;

  struct AdelicPoint {
    std::map<long, Quat> comp;  // local components, identity elsewhere
  };
  // component from a 2x2 rational matrix (for p not dividing N^-)
  void point_set_matrix(AdelicPoint& pt, long p, const std::array<Rat, 4>& mat) const;
  void point_mul_matrix(AdelicPoint& pt, long p, const std::array<Rat, 4>& mat) const;
  void point_mul_quat(AdelicPoint& pt, long p, const Quat& x) const;

  Lat lattice_of_point(const AdelicPoint& x) const;
  Lat lattice_right_mul_local(const Lat& I, long p, const Quat& t) const;

  struct Decomp {
    int cls;
    Quat gamma;
  };
  Decomp decompose(const AdelicPoint& x) const;

  int prec() const { return prec_; }

 private:
  void build_algebra();
  void build_maximal_order();
  void build_eichler();
  void build_classes() const;

  int prec_;
  mutable std::map<long, LocalSplitting> splits_;
  mutable std::vector<ClassRep> classes_;
  mutable bool classes_done_ = false;
};

// trace-zero sublattice of a lattice
Lat trace_zero_sublattice(const Algebra& Alg, const Lat& L);

}  // namespace yolift
