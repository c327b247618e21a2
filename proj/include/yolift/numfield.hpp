#pragma once

#include <memory>
#include <vector>

#include "yolift/rat.hpp"

namespace yolift {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a multiquadratic number field, stored on the power basis of a
// fixed primitive element.
class FE {
 public:
  FE() = default;                 // rational zero, no field attached
  explicit FE(const Rat& q);      // rational value, no field attached
  FE(FieldPtr F, std::vector<Rat> coeff);

  const FieldPtr& field() const { return F_; }
  const std::vector<Rat>& coeff() const { return c_; }
  // view in a concrete field (promotes rational-only values)
  FE in(const FieldPtr& F) const;

  bool is_zero() const;
  bool is_rational() const;
  Rat rational() const;  // throws unless is_rational()

  FE operator-() const;
  FE operator+(const FE& o) const;
  FE operator-(const FE& o) const;
  FE operator*(const FE& o) const;
  FE operator/(const FE& o) const;
  FE inv() const;
  FE pow(long e) const;
  bool operator==(const FE& o) const;
  bool operator!=(const FE& o) const { return !(*this == o); }

  FE& operator+=(const FE& o) { return *this = *this + o; }
  FE& operator-=(const FE& o) { return *this = *this - o; }
  FE& operator*=(const FE& o) { return *this = *this * o; }

  FE operator*(const Rat& q) const;
  FE operator+(const Rat& q) const;

  std::string str() const;

 private:
  FieldPtr F_;
  std::vector<Rat> c_;
  friend class NumberField;
};

// lambda = place over ell determined by Hensel lifts of the sqrt generators;
// requires ell split in the field (each (d_i / ell) = 1).
struct LambdaPlace {
  long ell = 0;
  int prec = 0;
  Int modulus;           // ell^prec
  Int theta;             // image of the primitive element mod ell^prec
  static constexpr long VAL_INF = 1L << 30;
};

// Q(sqrt(d_1), ..., sqrt(d_r)) for independent squarefree d_i.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // D: desired square generators (any nonzero integers, reduced internally)
  static FieldPtr make(const std::vector<Int>& D);
  static FieldPtr rationals() { return make({}); }

  int degree() const { return deg_; }
  const std::vector<Int>& generators() const { return gens_; }

  FE zero() const;
  FE one() const;
  FE from_rational(const Rat& q) const;
  FE from_int(long v) const { return from_rational(Rat(v)); }
  // sqrt of any nonzero integer whose squarefree part lies in the subgroup
  // generated by the d_i; throws otherwise
  FE sqrt_of(const Int& d) const;
  bool contains_sqrt(const Int& d) const;

  LambdaPlace lambda_place(long ell, int prec) const;
  // valuation at the place; exact zero reported as VAL_INF
  long valuation(const FE& x, const LambdaPlace& L) const;
  // residue in F_ell of a valuation >= 0 element
  Int residue(const FE& x, const LambdaPlace& L) const;

 private:
  NumberField() = default;
  std::vector<Rat> mul_mod(const std::vector<Rat>& a,
                           const std::vector<Rat>& b) const;
  std::vector<Rat> inv_mod(const std::vector<Rat>& a) const;
  Int eval_theta_poly(const FE& x, const LambdaPlace& L, long denshift) const;

  std::vector<Int> gens_;  // independent squarefree generators
  int deg_ = 1;
  std::vector<Rat> minpoly_;             // monic, length deg+1
  std::vector<std::vector<Rat>> xpow_;   // x^(deg+j) reduced, j = 0..deg-2
  std::vector<std::vector<Rat>> sqrt_;   // coords of sqrt(gens_[i])

  friend class FE;
};

}  // namespace yolift
