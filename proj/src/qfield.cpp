#include "prym/qfield.hpp"

#include <cmath>
#include <sstream>

namespace prym {

namespace {

long merge_radicand(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw MixedRadicand("sqrt(" + std::to_string(a) + ") vs sqrt(" + std::to_string(b) + ")");
}

}  // namespace

bool is_perfect_square(long n, long* root) {
  if (n < 0) return false;
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (root) *root = r;
  return r * r == n;
}

QuadNum::QuadNum(const mpq_class& p, const mpq_class& q, long D) : p_(p), q_(q), D_(D) {
  if (D < 0) throw std::invalid_argument("negative radicand");
  p_.canonicalize();
  q_.canonicalize();
  if (D == 0) q_ = 0;
}

int QuadNum::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0 || D_ == 0) return sp;
  long r = 0;
  if (is_perfect_square(D_, &r)) {
    mpq_class v = p_ + q_ * r;
    return sgn(v);
  }
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  mpq_class lhs = p_ * p_;
  mpq_class rhs = q_ * q_ * D_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sp : sq;
}

int QuadNum::compare(const QuadNum& a, const QuadNum& b) { return (a - b).sign(); }

std::optional<mpq_class> QuadNum::rational_value() const {
  if (q_ == 0 || D_ == 0) return p_;
  long r = 0;
  if (is_perfect_square(D_, &r)) return mpq_class(p_ + q_ * r);
  return std::nullopt;
}

bool QuadNum::is_integer() const {
  auto v = rational_value();
  return v && v->get_den() == 1;
}

double QuadNum::to_double() const {
  return p_.get_d() + q_.get_d() * std::sqrt(static_cast<double>(D_));
}

std::string QuadNum::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
    return os.str();
  }
  if (p_ != 0) os << p_ << (q_ > 0 ? "+" : "");
  os << q_ << "*sqrt(" << D_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  D_ = merge_radicand(D_, o.D_);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  D_ = merge_radicand(D_, o.D_);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  long D = merge_radicand(D_, o.D_);
  mpq_class np = p_ * o.p_ + q_ * o.q_ * D;
  mpq_class nq = p_ * o.q_ + q_ * o.p_;
  p_ = np;
  q_ = nq;
  D_ = D;
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  long D = merge_radicand(D_, o.D_);
  if (o.q_ == 0 || D == 0) {
    if (o.p_ == 0) throw DivisionByZero("rational zero divisor");
    p_ /= o.p_;
    q_ /= o.p_;
    D_ = D;
    return *this;
  }
  long r = 0;
  if (is_perfect_square(D, &r)) {
    // Q(sqrt(d^2)) is not a field; divide by the collapsed value
    mpq_class v = o.p_ + o.q_ * r;
    if (v == 0) throw DivisionByZero("divisor collapses to zero");
    p_ /= v;
    q_ /= v;
    D_ = D;
    return *this;
  }
  mpq_class n = o.p_ * o.p_ - o.q_ * o.q_ * D;
  if (n == 0) throw DivisionByZero("zero divisor");
  mpq_class np = (p_ * o.p_ - q_ * o.q_ * D) / n;
  mpq_class nq = (q_ * o.p_ - p_ * o.q_) / n;
  p_ = np;
  q_ = nq;
  D_ = D;
  return *this;
}

QuadNum qnum_arith(const QuadNum& x, const QuadNum& y, Op op) {
  switch (op) {
    case Op::add: return x + y;
    case Op::sub: return x - y;
    case Op::mul: return x * y;
    case Op::div: return x / y;
    case Op::neg: return -x;
    case Op::conj: return x.conj();
  }
  return x;
}

QuadNum abs(const QuadNum& x) { return x.sign() < 0 ? -x : x; }

mpz_class floor(const QuadNum& x) {
  mpz_class f(std::floor(x.to_double()));
  while (QuadNum(mpq_class(f)) > x) --f;
  while (QuadNum(mpq_class(f + 1)) <= x) ++f;
  return f;
}

QuadNum fmod_pos(const QuadNum& x, const QuadNum& m) {
  if (m.sign() <= 0) throw std::invalid_argument("fmod_pos needs m > 0");
  QuadNum r = x - QuadNum(mpq_class(floor(x / m))) * m;
  return r;
}

QuadNum lambda(long D, long e) { return (QuadNum(e) + QuadNum::sqrt_of(D)) / QuadNum(2); }

long canonical_d(long D) {
  long m16 = ((D % 16) + 16) % 16;
  for (long d : {0L, 2L})
    if ((d * d) % 16 == m16) return d;
  return (D % 4 == 0) ? 0 : 1;
}

bool OrderBasis::half_available(long D) {
  long d = canonical_d(D);
  return d % 2 == 0 && (((D - d * d) % 16) + 16) % 16 == 0;
}

OrderBasis::OrderBasis(long D_, bool half_) : D(D_), d(canonical_d(D_)), half(half_) {
  if (D <= 0) throw NotADiscriminant(std::to_string(D));
  // rho = (sqrt D - d)/2 has minimal polynomial x^2 + d x + (d^2 - D)/4
  if ((((d * d - D) % 4) + 4) % 4 != 0) throw NotADiscriminant(std::to_string(D));
  generator = (QuadNum::sqrt_of(D) - QuadNum(d)) / QuadNum(2);
  if (half) {
    // rho/2: x^2 + (d/2) x + (d^2 - D)/16
    if (!half_available(D))
      throw std::invalid_argument("{1, rho/2} is not an order basis for D=" + std::to_string(D));
    generator = generator / QuadNum(2);
  }
}

mpq_class frac_part(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - f;
}

RationalPart rational_part_fr(const QuadNum& x, const OrderBasis& basis) {
  if (x.radicand() != 0 && x.radicand() != basis.D)
    throw MixedRadicand("value over sqrt(" + std::to_string(x.radicand()) + ")");
  // sqrt D = 2 rho + d
  RationalPart r;
  r.p = x.p() + x.q() * basis.d;
  r.q = x.q() * (basis.half ? 4 : 2);
  r.fr = frac_part(r.p);
  return r;
}

Mat2 inverse2(const Mat2& m) {
  QuadNum det = det2(m);
  if (det.is_zero()) throw SingularMatrix("det = 0");
  return mat2(m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det);
}

}  // namespace prym
