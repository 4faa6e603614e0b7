#include "gentile/quad.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "gentile/error.hpp"

namespace gt {

const RadicandField* intern_field(const mpz_class& k) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RadicandField>> table;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = k.get_str();
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();
  auto f = std::make_unique<RadicandField>();
  f->k = k;
  f->kr = Rational(k);
  f->root = std::sqrt(k.get_d());
  auto* raw = f.get();
  table.emplace(key, std::move(f));
  return raw;
}

QuadScalar::QuadScalar(Rational a, Rational b, const RadicandField* f)
    : a_(std::move(a)), b_(std::move(b)), f_(f) {
  if (b_.is_zero()) f_ = nullptr;
}

QuadScalar::QuadScalar(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
  if (d.sign() < 0) throw Error(Errc::NegativeRadicand, "radicand " + d.str());
  if (b.is_zero() || d.is_zero()) return;
  Rational c;
  mpz_class k;
  squarefree_split(d, &c, &k);
  if (k == 1) {
    a_ += b * c;
    return;
  }
  b_ = b * c;
  f_ = intern_field(k);
}

const RadicandField* QuadScalar::common(const QuadScalar& x, const QuadScalar& y) {
  if (!x.f_) return y.f_;
  if (!y.f_ || x.f_ == y.f_) return x.f_;
  throw Error(Errc::RadicandMismatch, "sqrt(" + x.f_->k.get_str() + ") vs sqrt(" + y.f_->k.get_str() + ")");
}

void QuadScalar::coefficients_for(const Rational& d, Rational* a, Rational* b) const {
  *a = a_;
  if (!f_) {
    *b = Rational();
    return;
  }
  if (d.sign() <= 0) throw Error(Errc::RadicandMismatch, "value " + str() + " outside Q");
  Rational c;
  mpz_class k;
  squarefree_split(d, &c, &k);
  if (k != f_->k) throw Error(Errc::RadicandMismatch, "value " + str() + " outside Q(sqrt(" + d.str() + "))");
  *b = b_ / c;
}

int QuadScalar::sign() const {
  int sa = a_.sign();
  if (!f_) return sa;
  int sb = b_.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 k; equality is impossible for
  // squarefree k > 1.
  int c = compare(a_ * a_, b_ * b_ * f_->kr);
  return c > 0 ? sa : sb;
}

double QuadScalar::to_double() const {
  if (!f_) return a_.to_double();
  // Evaluate through GMP floats so large coefficients do not cancel badly.
  mpf_class a(a_.to_mpq(), 256), b(b_.to_mpq(), 256), k(f_->kr.to_mpq(), 256);
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), k.get_mpf_t());
  mpf_class v = a + b * r;
  return v.get_d();
}

std::string QuadScalar::str() const {
  if (!f_) return a_.str();
  return a_.str() + (b_.sign() < 0 ? "-" : "+") + b_.abs().str() + "*sqrt(" + f_->k.get_str() + ")";
}

QuadScalar QuadScalar::operator-() const { return QuadScalar(-a_, -b_, f_); }
QuadScalar QuadScalar::conjugate() const { return QuadScalar(a_, -b_, f_); }

Rational QuadScalar::norm() const {
  if (!f_) return a_ * a_;
  return a_ * a_ - b_ * b_ * f_->kr;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!f_) return QuadScalar(a_.inverse());
  Rational n = norm();
  return QuadScalar(a_ / n, -b_ / n, f_);
}

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
  if (!x.f_ && !y.f_) return QuadScalar(x.a_ + y.a_);
  const RadicandField* f = QuadScalar::common(x, y);
  return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, f);
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
  if (!x.f_ && !y.f_) return QuadScalar(x.a_ - y.a_);
  const RadicandField* f = QuadScalar::common(x, y);
  return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, f);
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
  if (!x.f_ && !y.f_) return QuadScalar(x.a_ * y.a_);
  const RadicandField* f = QuadScalar::common(x, y);
  if (!x.f_) return QuadScalar(x.a_ * y.a_, x.a_ * y.b_, f);
  if (!y.f_) return QuadScalar(x.a_ * y.a_, x.b_ * y.a_, f);
  return QuadScalar(x.a_ * y.a_ + x.b_ * y.b_ * f->kr, x.a_ * y.b_ + x.b_ * y.a_, f);
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (!y.f_) {
    Rational inv = y.a_.inverse();
    return QuadScalar(x.a_ * inv, x.b_ * inv, x.f_);
  }
  return x * y.inverse();
}

int compare(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign(); }

std::size_t QuadScalar::hash() const {
  std::size_t h = a_.hash();
  h ^= b_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& q) { return os << q.str(); }

}  // namespace gt
