#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace gt {

// Exact rational in lowest terms. Values that fit comfortably in 64 bits stay
// in an inline pair; everything else lives in a GMP rational. The split is
// canonical, so two equal values always have the same representation.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT: implicit from integers is intended
  Rational(int n) : Rational(static_cast<long long>(n)) {}
  Rational(long n) : Rational(static_cast<long long>(n)) {}
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Parses "n" or "n/d" (optional leading '-'). Throws gt::Error on bad input.
  static Rational parse(std::string_view s);
  std::string str() const;

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y);
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend int compare(const Rational& x, const Rational& y);
  friend bool operator<(const Rational& x, const Rational& y) { return compare(x, y) < 0; }
  friend bool operator>(const Rational& x, const Rational& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Rational& x, const Rational& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Rational& x, const Rational& y) { return compare(x, y) >= 0; }

  std::size_t hash() const;

 private:
  static Rational from_mpq(mpq_class q);
  static Rational from_wide(__int128 n, __int128 d);  // d > 0, not yet reduced

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational* root);

// Writes r = c^2 * k with k a squarefree integer (sign kept in k). Square
// factors are extracted by trial division; a cofactor that resists trial
// division is tested for being a perfect square before being kept whole.
void squarefree_split(const Rational& r, Rational* c, mpz_class* k);

}  // namespace gt

template <>
struct std::hash<gt::Rational> {
  std::size_t operator()(const gt::Rational& r) const { return r.hash(); }
};
