#pragma once

#include <iosfwd>
#include <string>

#include "gentile/rational.hpp"

namespace gt {

// Interned squarefree radicand k > 1. Identity of the pointer is identity of
// the field, which makes the "same radicand" test a pointer comparison.
struct RadicandField {
  mpz_class k;
  Rational kr;
  double root;  // presentation only
};

const RadicandField* intern_field(const mpz_class& k);

// a + b*sqrt(k) with k squarefree. A value with b == 0 carries no field and
// combines with any other value; two values with distinct fields cannot mix.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(const Rational& a) : a_(a) {}  // NOLINT
  QuadScalar(long long a) : a_(a) {}        // NOLINT
  QuadScalar(int a) : a_(a) {}              // NOLINT
  QuadScalar(long a) : a_(a) {}             // NOLINT
  // a + b*sqrt(d). Collapses when d is a rational square; d is reduced to its
  // squarefree integer part with the cofactor folded into b.
  QuadScalar(const Rational& a, const Rational& b, const Rational& d);

  static QuadScalar sqrt_of(const Rational& d) { return QuadScalar(0, 1, d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const RadicandField* field() const { return f_; }
  // Squarefree radicand of this value (1 when rational).
  Rational radicand() const { return f_ ? f_->kr : Rational(1); }
  bool is_rational() const { return f_ == nullptr; }
  bool is_zero() const { return f_ == nullptr && a_.is_zero(); }

  // Coefficients relative to a declared radicand d: value = a + b*sqrt(d).
  // Throws RadicandMismatch when the value is not in Q(sqrt(d)).
  void coefficients_for(const Rational& d, Rational* a, Rational* b) const;

  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadScalar operator-() const;
  QuadScalar conjugate() const;
  QuadScalar inverse() const;
  // a^2 - b^2 k, the field norm.
  Rational norm() const;

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
  QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.f_ == y.f_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }
  friend int compare(const QuadScalar& x, const QuadScalar& y);
  friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return compare(x, y) < 0; }
  friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return compare(x, y) > 0; }
  friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return compare(x, y) >= 0; }

  std::size_t hash() const;

 private:
  QuadScalar(Rational a, Rational b, const RadicandField* f);
  static const RadicandField* common(const QuadScalar& x, const QuadScalar& y);

  Rational a_;
  Rational b_;
  const RadicandField* f_ = nullptr;
};

inline int sign_of(const QuadScalar& s) { return s.sign(); }

std::ostream& operator<<(std::ostream& os, const QuadScalar& q);

}  // namespace gt

template <>
struct std::hash<gt::QuadScalar> {
  std::size_t operator()(const gt::QuadScalar& q) const { return q.hash(); }
};
