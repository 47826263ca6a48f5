#pragma once

// Exact arithmetic in Q(beta) for a quadratic Pisot unit beta.
//
// beta is the larger root of x^2 = p*x + s with s in {+1, -1}.  Its Galois
// conjugate is beta' = p - beta and beta * beta' = -s.  Every element is
// stored as a + b*beta with exact rational (QuadRat) or integer (QuadInt)
// coefficients; the real order is decided in integer arithmetic by writing
// x = (u + v*sqrt(D)) / w with D = p^2 + 4s.

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "pisot/errors.hpp"

namespace pisot {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <unsigned Bits>
using BinFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

class QuadUnit {
 public:
  QuadUnit() = default;  // golden ratio

  static QuadUnit make(long p, int sign) {
    if (sign != 1 && sign != -1) {
      throw ParameterError("sign must be +1 or -1");
    }
    if (sign == 1 && p < 1) {
      throw ParameterError("p>=1 required for plus case (beta^2 = p*beta + 1)");
    }
    if (sign == -1 && p < 3) {
      throw ParameterError("p>=3 required for minus case (beta^2 = p*beta - 1)");
    }
    return QuadUnit(p, sign);
  }

  static QuadUnit golden() { return QuadUnit(1, 1); }
  static QuadUnit silver() { return QuadUnit(2, 1); }

  long p() const noexcept { return p_; }
  int sign() const noexcept { return sign_; }
  long discriminant() const noexcept { return p_ * p_ + 4L * sign_; }

  // beta lies in (p, p+1) for the plus case and in (p-1, p) for the minus case.
  long floor_beta() const noexcept { return sign_ > 0 ? p_ : p_ - 1; }

  double beta_approx() const noexcept {
    return (static_cast<double>(p_) + std::sqrt(static_cast<double>(discriminant()))) / 2.0;
  }
  double conj_approx() const noexcept { return static_cast<double>(p_) - beta_approx(); }

  std::string name() const {
    std::ostringstream os;
    os << "beta^2=" << p_ << "*beta" << (sign_ > 0 ? "+1" : "-1");
    return os.str();
  }

  friend bool operator==(const QuadUnit&, const QuadUnit&) = default;

 private:
  QuadUnit(long p, int sign) : p_(p), sign_(sign) {}

  long p_ = 1;
  int sign_ = 1;
};

inline QuadUnit make_unit(long p, int sign) { return QuadUnit::make(p, sign); }

namespace detail {

inline void require_same_unit(const QuadUnit& x, const QuadUnit& y) {
  if (!(x == y)) {
    throw ParameterError("operands live in different quadratic fields");
  }
}

// Sign of u + v*sqrt(disc) for a non-square disc > 0.
inline int surd_sign(const Integer& u, const Integer& v, long disc) {
  const int su = u.sign();
  const int sv = v.sign();
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;

  // Opposite strict signs. Try a double evaluation with a rigorous margin first.
  const double ud = static_cast<double>(u);
  const double vd = static_cast<double>(v);
  const double root = std::sqrt(static_cast<double>(disc));
  const double mag = std::fabs(ud) + std::fabs(vd) * root;
  if (std::isfinite(mag)) {
    const double s = ud + vd * root;
    if (std::fabs(s) > 1e-9 * mag) return s > 0 ? 1 : -1;
  }
  const Integer lhs = u * u;
  const Integer rhs = v * v * disc;
  const int c = lhs.compare(rhs);
  return su > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

template <class F>
F surd_value(const Integer& u, const Integer& v, const Integer& w, long disc) {
  const F root = boost::multiprecision::sqrt(F(disc));
  if (u.sign() * v.sign() >= 0) {
    return (F(u) + F(v) * root) / F(w);
  }
  // u and -v*sqrt(disc) share a sign: rationalize to avoid cancellation.
  const Integer num = u * u - v * v * disc;
  return F(num) / (F(w) * (F(u) - F(v) * root));
}

}  // namespace detail

class QuadInt;

// a + b*beta with rational coefficients.
class QuadRat {
 public:
  QuadRat() = default;
  explicit QuadRat(QuadUnit unit, Rational a = 0, Rational b = 0)
      : a_(std::move(a)), b_(std::move(b)), unit_(unit) {}
  QuadRat(const QuadInt& x);  // NOLINT: Z[beta] embeds in Q(beta)

  static QuadRat beta(QuadUnit u) { return QuadRat(u, 0, 1); }
  static QuadRat beta_conj(QuadUnit u) { return QuadRat(u, u.p(), -1); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  QuadUnit unit() const noexcept { return unit_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_integral() const {
    return boost::multiprecision::denominator(a_) == 1 &&
           boost::multiprecision::denominator(b_) == 1;
  }
  QuadInt to_int() const;

  QuadRat conjugate() const { return QuadRat(unit_, a_ + b_ * unit_.p(), -b_); }

  // x * x'
  Rational norm() const { return a_ * a_ + a_ * b_ * unit_.p() - b_ * b_ * unit_.sign(); }
  Rational trace() const { return 2 * a_ + b_ * unit_.p(); }

  QuadRat inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw std::domain_error("division by zero in Q(beta)");
    const QuadRat c = conjugate();
    return QuadRat(unit_, c.a_ / n, c.b_ / n);
  }

  QuadRat operator-() const { return QuadRat(unit_, -a_, -b_); }

  QuadRat& operator+=(const QuadRat& y) {
    detail::require_same_unit(unit_, y.unit_);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  QuadRat& operator-=(const QuadRat& y) {
    detail::require_same_unit(unit_, y.unit_);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
  }
  QuadRat& operator*=(const QuadRat& y) {
    detail::require_same_unit(unit_, y.unit_);
    // beta^2 = p*beta + s
    const Rational bd = b_ * y.b_;
    Rational na = a_ * y.a_ + bd * unit_.sign();
    Rational nb = a_ * y.b_ + b_ * y.a_ + bd * unit_.p();
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadRat& operator/=(const QuadRat& y) { return *this *= y.inverse(); }

  QuadRat& operator+=(const Rational& r) {
    a_ += r;
    return *this;
  }
  QuadRat& operator-=(const Rational& r) {
    a_ -= r;
    return *this;
  }
  QuadRat& operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
  }
  QuadRat& operator/=(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("division by zero in Q(beta)");
    a_ /= r;
    b_ /= r;
    return *this;
  }

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
  friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
  friend QuadRat operator+(QuadRat x, const Rational& r) { return x += r; }
  friend QuadRat operator-(QuadRat x, const Rational& r) { return x -= r; }
  friend QuadRat operator*(QuadRat x, const Rational& r) { return x *= r; }
  friend QuadRat operator/(QuadRat x, const Rational& r) { return x /= r; }
  friend QuadRat operator+(const Rational& r, QuadRat x) { return x += r; }
  friend QuadRat operator-(const Rational& r, const QuadRat& x) { return -x + r; }
  friend QuadRat operator*(const Rational& r, QuadRat x) { return x *= r; }

  friend bool operator==(const QuadRat&, const QuadRat&) = default;
  friend std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y);

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  QuadUnit unit_{};
};

// a + b*beta with integer coefficients: the ring Z[beta].
class QuadInt {
 public:
  QuadInt() = default;
  explicit QuadInt(QuadUnit unit, Integer a = 0, Integer b = 0)
      : a_(std::move(a)), b_(std::move(b)), unit_(unit) {}

  static QuadInt beta(QuadUnit u) { return QuadInt(u, 0, 1); }

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  QuadUnit unit() const noexcept { return unit_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadInt conjugate() const { return QuadInt(unit_, a_ + b_ * unit_.p(), -b_); }
  Integer norm() const { return a_ * a_ + a_ * b_ * unit_.p() - b_ * b_ * unit_.sign(); }

  QuadInt times_beta() const {
    // (a + b*beta)*beta = s*b + (a + p*b)*beta
    return QuadInt(unit_, b_ * unit_.sign(), a_ + b_ * unit_.p());
  }
  QuadInt div_beta() const {
    // beta^{-1} = -s*beta' = -s*p + s*beta
    const int s = unit_.sign();
    return QuadInt(unit_, b_ - a_ * unit_.p() * s, a_ * s);
  }

  // Inverse of a unit (norm +-1).
  QuadInt unit_inverse() const {
    const Integer n = norm();
    if (n != 1 && n != -1) throw std::domain_error("element is not a unit of Z[beta]");
    const QuadInt c = conjugate();
    return QuadInt(unit_, c.a_ * n, c.b_ * n);
  }

  QuadInt operator-() const { return QuadInt(unit_, -a_, -b_); }

  QuadInt& operator+=(const QuadInt& y) {
    detail::require_same_unit(unit_, y.unit_);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& y) {
    detail::require_same_unit(unit_, y.unit_);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
  }
  QuadInt& operator*=(const QuadInt& y) {
    detail::require_same_unit(unit_, y.unit_);
    const Integer bd = b_ * y.b_;
    Integer na = a_ * y.a_ + bd * unit_.sign();
    Integer nb = a_ * y.b_ + b_ * y.a_ + bd * unit_.p();
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadInt& operator+=(const Integer& k) {
    a_ += k;
    return *this;
  }
  QuadInt& operator-=(const Integer& k) {
    a_ -= k;
    return *this;
  }
  QuadInt& operator*=(const Integer& k) {
    a_ *= k;
    b_ *= k;
    return *this;
  }

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
  friend QuadInt operator+(QuadInt x, const Integer& k) { return x += k; }
  friend QuadInt operator-(QuadInt x, const Integer& k) { return x -= k; }
  friend QuadInt operator*(QuadInt x, const Integer& k) { return x *= k; }
  friend QuadInt operator*(const Integer& k, QuadInt x) { return x *= k; }

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
  friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y);

 private:
  Integer a_ = 0;
  Integer b_ = 0;
  QuadUnit unit_{};
};

inline QuadRat::QuadRat(const QuadInt& x) : a_(x.a()), b_(x.b()), unit_(x.unit()) {}

inline QuadInt QuadRat::to_int() const {
  if (!is_integral()) throw std::domain_error("element is not in Z[beta]");
  return QuadInt(unit_, boost::multiprecision::numerator(a_), boost::multiprecision::numerator(b_));
}

// Orders lattice points by their (a, b) coefficients. Used for set keys only;
// it is unrelated to the real order.
struct LatticeLess {
  bool operator()(const QuadInt& x, const QuadInt& y) const {
    const int c = x.a().compare(y.a());
    if (c != 0) return c < 0;
    return x.b().compare(y.b()) < 0;
  }
};

inline int sign_of(const QuadInt& x) {
  // x = (2a + b*p + b*sqrt(D)) / 2
  return detail::surd_sign(2 * x.a() + x.b() * x.unit().p(), x.b(), x.unit().discriminant());
}

inline int sign_of(const QuadRat& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Integer ad = denominator(x.a());
  const Integer bd = denominator(x.b());
  const Integer bn = numerator(x.b());
  // Scale by 2*ad*bd > 0.
  const Integer u = 2 * numerator(x.a()) * bd + bn * ad * x.unit().p();
  const Integer v = bn * ad;
  return detail::surd_sign(u, v, x.unit().discriminant());
}

inline std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
  const int s = sign_of(x - y);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
  const int s = sign_of(x - y);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline std::strong_ordering compare(const QuadRat& x, const QuadRat& y) { return x <=> y; }

template <unsigned Bits>
BinFloat<Bits> to_float(const QuadRat& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Integer ad = denominator(x.a());
  const Integer bd = denominator(x.b());
  const Integer bn = numerator(x.b());
  const Integer u = 2 * numerator(x.a()) * bd + bn * ad * x.unit().p();
  const Integer v = bn * ad;
  const Integer w = 2 * ad * bd;
  if (v.is_zero()) {
    return BinFloat<Bits>(BinFloat<Bits + 64>(u) / BinFloat<Bits + 64>(w));
  }
  return BinFloat<Bits>(detail::surd_value<BinFloat<Bits + 64>>(u, v, w, x.unit().discriminant()));
}

inline double to_double(const QuadRat& x) {
  return static_cast<double>(to_float<53>(x));
}

inline Integer floor_of(const QuadRat& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  // Float bootstrap, then exact correction.
  double approx = static_cast<double>(x.a()) + static_cast<double>(x.b()) * x.unit().beta_approx();
  const double mag = std::fabs(static_cast<double>(x.a())) +
                     std::fabs(static_cast<double>(x.b())) * x.unit().beta_approx();
  if (!std::isfinite(approx) || std::fabs(approx) < 1e-6 * mag) {
    approx = to_double(x);
  }
  Integer n(std::floor(approx));
  const QuadUnit u = x.unit();
  while (QuadRat(u, n) > x) --n;
  while (QuadRat(u, n + 1) <= x) ++n;
  return n;
}

inline Integer ceil_of(const QuadRat& x) { return -floor_of(-x); }

inline Integer floor_of(const QuadInt& x) { return floor_of(QuadRat(x)); }

// beta^k for any integer k (beta is a unit, so negative powers stay in Z[beta]).
inline QuadInt beta_power(QuadUnit u, long k) {
  QuadInt r(u, 1, 0);
  if (k >= 0) {
    for (long i = 0; i < k; ++i) r = r.times_beta();
  } else {
    for (long i = 0; i < -k; ++i) r = r.div_beta();
  }
  return r;
}

inline QuadRat beta_pow(QuadUnit u, long k) { return QuadRat(beta_power(u, k)); }

// Text form "a + b*beta" with rational coefficients.
inline std::string to_string(const QuadRat& x) {
  std::ostringstream os;
  os << x.a() << (x.b() < 0 ? " - " : " + ") << abs(x.b()) << "*beta";
  return os.str();
}

inline std::string to_string(const QuadInt& x) { return to_string(QuadRat(x)); }

inline std::ostream& operator<<(std::ostream& os, const QuadRat& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << to_string(x); }

// x = (num_a + num_b*beta) / den with integers and den > 0 minimal.
struct CommonDenominator {
  Integer a;
  Integer b;
  Integer den;
};

inline CommonDenominator common_denominator(const QuadRat& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Integer ad = denominator(x.a());
  const Integer bd = denominator(x.b());
  const Integer den = boost::multiprecision::lcm(ad, bd);
  return {numerator(x.a()) * (den / ad), numerator(x.b()) * (den / bd), den};
}

}  // namespace pisot
