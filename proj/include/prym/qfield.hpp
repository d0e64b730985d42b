#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <ostream>
#include <string>

#include "prym/errors.hpp"

namespace prym {

// p + q*sqrt(D) with rational p, q.  D == 0 marks a plain rational that
// combines with any radicand.  Perfect-square D keeps q symbolic; only
// sign/equality collapse sqrt(D) to an integer.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(int v) : p_(v) {}
  QuadNum(long v) : p_(v) {}
  QuadNum(const mpq_class& p) : p_(p) {}
  QuadNum(const mpq_class& p, const mpq_class& q, long D);

  static QuadNum sqrt_of(long D) { return QuadNum(0, 1, D); }
  static QuadNum frac(long num, long den) { return QuadNum(mpq_class(num, den)); }

  const mpq_class& p() const { return p_; }
  const mpq_class& q() const { return q_; }
  long radicand() const { return D_; }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  // q == 0 in storage
  bool is_rational() const { return q_ == 0; }
  // exact rational value when q == 0 or D is a perfect square
  std::optional<mpq_class> rational_value() const;
  bool is_integer() const;

  QuadNum conj() const { return QuadNum(p_, -q_, D_); }
  // p^2 - q^2 D
  mpq_class norm() const { return p_ * p_ - q_ * q_ * D_; }
  double to_double() const;
  std::string str() const;

  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);
  QuadNum operator-() const { return QuadNum(-p_, -q_, D_); }

  friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
  friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
  friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
  friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }

  friend bool operator==(const QuadNum& a, const QuadNum& b) { return compare(a, b) == 0; }
  friend bool operator!=(const QuadNum& a, const QuadNum& b) { return compare(a, b) != 0; }
  friend bool operator<(const QuadNum& a, const QuadNum& b) { return compare(a, b) < 0; }
  friend bool operator>(const QuadNum& a, const QuadNum& b) { return compare(a, b) > 0; }
  friend bool operator<=(const QuadNum& a, const QuadNum& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const QuadNum& a, const QuadNum& b) { return compare(a, b) >= 0; }

  static int compare(const QuadNum& a, const QuadNum& b);

 private:
  mpq_class p_{0};
  mpq_class q_{0};
  long D_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

enum class Op { add, sub, mul, div, neg, conj };
QuadNum qnum_arith(const QuadNum& x, const QuadNum& y, Op op);

enum class Sign { negative = -1, zero = 0, positive = 1 };
inline Sign qnum_sign(const QuadNum& x) { return static_cast<Sign>(x.sign()); }

QuadNum abs(const QuadNum& x);
// floor of a value, exact
mpz_class floor(const QuadNum& x);
// x mod m in [0, m), m > 0
QuadNum fmod_pos(const QuadNum& x, const QuadNum& m);

// lambda = (e + sqrt D)/2
QuadNum lambda(long D, long e);
bool is_perfect_square(long n, long* root = nullptr);

// smallest nonnegative even d with d^2 = D (mod 16); when none exists the
// smallest nonnegative d with d^2 = D (mod 4)
long canonical_d(long D);

// {1, rho} with rho = (sqrt D - d)/2, or {1, rho/2} when half is set
struct OrderBasis {
  long D = 0;
  long d = 0;
  bool half = false;
  QuadNum generator;

  OrderBasis(long D, bool half);
  static bool half_available(long D);
};

struct RationalPart {
  mpq_class p;
  mpq_class q;
  mpq_class fr;
};

RationalPart rational_part_fr(const QuadNum& x, const OrderBasis& basis);
mpq_class frac_part(const mpq_class& x);

}  // namespace prym

namespace Eigen {
template <>
struct NumTraits<prym::QuadNum> : GenericNumTraits<prym::QuadNum> {
  typedef prym::QuadNum Real;
  typedef prym::QuadNum NonInteger;
  typedef prym::QuadNum Nested;
  typedef prym::QuadNum Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace prym {

using Vec2 = Eigen::Matrix<QuadNum, 2, 1>;
using Mat2 = Eigen::Matrix<QuadNum, 2, 2>;

inline Vec2 vec2(const QuadNum& x, const QuadNum& y) {
  Vec2 v;
  v << x, y;
  return v;
}
inline Mat2 mat2(const QuadNum& a, const QuadNum& b, const QuadNum& c, const QuadNum& d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}
inline QuadNum det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
inline QuadNum cross2(const Vec2& a, const Vec2& b) { return a(0) * b(1) - a(1) * b(0); }
inline QuadNum dot2(const Vec2& a, const Vec2& b) { return a(0) * b(0) + a(1) * b(1); }
inline bool equal2(const Vec2& a, const Vec2& b) { return a(0) == b(0) && a(1) == b(1); }
Mat2 inverse2(const Mat2& m);

}  // namespace prym
