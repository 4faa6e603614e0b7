#include "gentile/rational.hpp"

#include <cmath>
#include <ostream>

#include "gentile/error.hpp"

namespace gt {

namespace {

// Inline representation bound: keeps every cross product well inside __int128.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits_small(__int128 v) { return v > -__int128{kSmallLimit} && v < __int128{kSmallLimit}; }

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? std::uint64_t(-(v + 1)) + 1 : std::uint64_t(v); }

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RadicandMismatch: return "RadicandMismatch";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::DegenerateSource: return "DegenerateSource";
    case Errc::NotASimilarity: return "NotASimilarity";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::RatioNotRational: return "RatioNotRational";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotRightTriangle: return "NotRightTriangle";
    case Errc::UnsupportedMaster: return "UnsupportedMaster";
    case Errc::MismatchedTileCounts: return "MismatchedTileCounts";
    case Errc::SingularFixedPointSystem: return "SingularFixedPointSystem";
    case Errc::UnknownCurve: return "UnknownCurve";
    case Errc::PreconditionFailed: return "PreconditionFailed";
  }
  return "Error";
}

Rational::Rational(long long n) {
  if (fits_small(n)) {
    num_ = n;
  } else {
    *this = from_mpq(mpq_class(mpz_from_i128(n)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  *this = from_wide(den < 0 ? -__int128{num} : __int128{num}, den < 0 ? -__int128{den} : __int128{den});
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational::Rational(const mpz_class& z) { *this = from_mpq(mpq_class(z)); }

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (n == 0) return Rational();
  unsigned __int128 un = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
  unsigned __int128 g = gcd_u128(un, (unsigned __int128)d);
  if (g > 1) {
    n /= (__int128)g;
    d /= (__int128)g;
  }
  if (fits_small(n) && fits_small(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&]() { return Error(Errc::ParseError, "bad rational '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && t[0] == '-') i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string_view ns = s.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!digits_ok(ns, true) || !digits_ok(ds, false)) throw bad();
  mpz_class n{std::string(ns)}, d{std::string(ds)};
  if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(std::move(q));
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (big_) return from_mpq(mpq_class(1) / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.den_ == y.den_) {
      __int128 n = __int128{x.num_} + y.num_;
      if (x.den_ == 1) return Rational::from_wide(n, 1);
      return Rational::from_wide(n, x.den_);
    }
    return Rational::from_wide(__int128{x.num_} * y.den_ + __int128{y.num_} * x.den_, __int128{x.den_} * y.den_);
  }
  return Rational::from_mpq(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.den_ == y.den_) return Rational::from_wide(__int128{x.num_} - y.num_, x.den_);
    return Rational::from_wide(__int128{x.num_} * y.den_ - __int128{y.num_} * x.den_, __int128{x.den_} * y.den_);
  }
  return Rational::from_mpq(x.to_mpq() - y.to_mpq());
}

Rational operator*(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0 || y.num_ == 0) return Rational();
    std::int64_t g1 = static_cast<std::int64_t>(gcd_u64(uabs(x.num_), static_cast<std::uint64_t>(y.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(gcd_u64(uabs(y.num_), static_cast<std::uint64_t>(x.den_)));
    __int128 n = __int128{x.num_ / g1} * (y.num_ / g2);
    __int128 d = __int128{x.den_ / g2} * (y.den_ / g1);
    if (fits_small(n) && fits_small(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::from_mpq(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
  }
  return Rational::from_mpq(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  return x * y.inverse();
}

bool operator==(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
  if (x.big_ && y.big_) return *x.big_ == *y.big_;
  return false;  // canonical split: small never equals big
}

int compare(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    __int128 l = __int128{x.num_} * y.den_;
    __int128 r = __int128{y.num_} * x.den_;
    return (l > r) - (l < r);
  }
  return cmp(x.to_mpq(), y.to_mpq());
}

std::size_t Rational::hash() const {
  if (!big_) return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
  return std::hash<std::string>()(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool rational_sqrt(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  if (r.is_zero()) {
    if (root) *root = Rational();
    return true;
  }
  mpz_class n = r.numerator(), d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(mpq_class(sn, sd));
  }
  return true;
}

void squarefree_split(const Rational& r, Rational* c, mpz_class* k) {
  // r = n/d = n*d / d^2, so the squarefree part of n*d carries the radical.
  mpz_class m = r.numerator() * r.denominator();
  int s = sgn(m);
  if (s < 0) m = -m;
  mpz_class coef = 1;
  mpz_class rest = m;
  if (rest != 0) {
    for (unsigned long p = 2; p <= 100000; p += (p == 2 ? 1 : 2)) {
      mpz_class pp = mpz_class(p) * p;
      if (pp > rest) break;
      while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
        rest /= pp;
        coef *= p;
      }
    }
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class sq;
      mpz_sqrt(sq.get_mpz_t(), rest.get_mpz_t());
      coef *= sq;
      rest = 1;
    }
  }
  if (c) *c = Rational(mpq_class(coef, r.denominator()));
  if (k) *k = s < 0 ? mpz_class(-rest) : rest;
}

}  // namespace gt
