#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gentile/quad.hpp"

namespace gt {

// Q(sqrt g_1, ..., sqrt g_k) for multiplicatively independent squarefree
// integers g_i. An element is a rational vector over the basis
// prod_{i in S} sqrt g_i indexed by subset masks S; independence makes the
// representation unique.
class MQField {
 public:
  // Adds sqrt(q) for each candidate whose squarefree part is not already in
  // the field. Candidates must be positive rationals.
  static std::shared_ptr<const MQField> generated_by(const std::vector<Rational>& candidates);

  int gens() const { return static_cast<int>(gens_.size()); }
  int dim() const { return 1 << gens(); }
  const Rational& gen(int i) const { return gens_[i]; }
  // basis(S) * basis(T) = coef(S, T) * basis(S ^ T)
  const Rational& coef(int s, int t) const { return coef_[s * dim() + t]; }
  // sqrt(q) = c * basis(mask) for rational q > 0, if the field contains it.
  bool sqrt_of(const Rational& q, Rational* c, int* mask) const;

 private:
  std::vector<Rational> gens_;
  std::vector<std::vector<int>> prime_sets_;  // row-reduced exponent vectors
  std::vector<mpz_class> primes_;
  std::vector<Rational> coef_;
};

class MQ {
 public:
  MQ() : c_(1) {}
  MQ(const Rational& r) : c_(1, r) {}  // NOLINT
  MQ(int v) : c_(1, Rational(v)) {}     // NOLINT
  MQ(const MQField* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {}

  static MQ from_quad(const QuadScalar& q, const MQField& f);
  static MQ sqrt_of(const Rational& q, const MQField& f);

  const MQField* field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }
  bool is_zero() const;
  int sign() const;
  MQ inverse() const;

  friend MQ operator+(const MQ& x, const MQ& y);
  friend MQ operator-(const MQ& x, const MQ& y);
  friend MQ operator*(const MQ& x, const MQ& y);
  friend MQ operator/(const MQ& x, const MQ& y);
  MQ operator-() const;
  MQ& operator+=(const MQ& y) { return *this = *this + y; }

  friend bool operator==(const MQ& x, const MQ& y);
  friend bool operator!=(const MQ& x, const MQ& y) { return !(x == y); }
  friend int compare(const MQ& x, const MQ& y) { return (x - y).sign(); }
  friend bool operator<(const MQ& x, const MQ& y) { return compare(x, y) < 0; }
  friend bool operator>(const MQ& x, const MQ& y) { return compare(x, y) > 0; }
  friend bool operator<=(const MQ& x, const MQ& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const MQ& x, const MQ& y) { return compare(x, y) >= 0; }

  // Back to a + b sqrt(d), when the value lies in that subfield.
  std::optional<QuadScalar> to_quad(const Rational& d) const;

 private:
  static const MQField* common(const MQ& x, const MQ& y);
  std::vector<Rational> expanded(const MQField* f) const;

  const MQField* f_ = nullptr;
  std::vector<Rational> c_;
};

}  // namespace gt
