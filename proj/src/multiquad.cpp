#include "gentile/multiquad.hpp"

#include <algorithm>

#include "gentile/error.hpp"

namespace gt {

namespace {

// Prime factors (each once) of a squarefree positive integer. A cofactor
// beyond the trial-division range is kept as a single atom.
std::vector<mpz_class> factor_squarefree(mpz_class n) {
  std::vector<mpz_class> out;
  for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Row {
  std::vector<char> bits;  // over the field's prime list
  int mask = 0;            // generators combined into this row
  int pivot = -1;
};

using Rows = std::vector<Row>;

void reduce(std::vector<char>& v, int& mask, const Rows& rows) {
  for (const auto& r : rows) {
    if (r.pivot < static_cast<int>(v.size()) && v[r.pivot]) {
      for (std::size_t i = 0; i < r.bits.size(); ++i) v[i] ^= r.bits[i];
      mask ^= r.mask;
    }
  }
}

int first_set(const std::vector<char>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return static_cast<int>(i);
  return -1;
}

bool is_zero_vec(const Rational* v, int n) {
  for (int i = 0; i < n; ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

void mul_vec(const Rational* a, const Rational* b, Rational* out, int L, const MQField& f) {
  const int n = 1 << L;
  for (int i = 0; i < n; ++i) out[i] = Rational();
  for (int s = 0; s < n; ++s) {
    if (a[s].is_zero()) continue;
    for (int t = 0; t < n; ++t) {
      if (b[t].is_zero()) continue;
      out[s ^ t] += a[s] * b[t] * f.coef(s, t);
    }
  }
}

int sign_vec(const Rational* v, int L, const MQField& f) {
  if (L == 0) return v[0].sign();
  const int half = 1 << (L - 1);
  const Rational* y = v;
  const Rational* z = v + half;
  if (is_zero_vec(z, half)) return sign_vec(y, L - 1, f);
  int sy = sign_vec(y, L - 1, f), sz = sign_vec(z, L - 1, f);
  if (sy == 0) return sz;
  if (sy == sz) return sy;
  std::vector<Rational> yy(half), zz(half);
  mul_vec(y, y, yy.data(), L - 1, f);
  mul_vec(z, z, zz.data(), L - 1, f);
  const Rational& g = f.gen(L - 1);
  for (int i = 0; i < half; ++i) yy[i] -= zz[i] * g;
  return sign_vec(yy.data(), L - 1, f) > 0 ? sy : sz;
}

void inverse_vec(const Rational* v, Rational* out, int L, const MQField& f) {
  if (L == 0) {
    if (v[0].is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    out[0] = v[0].inverse();
    return;
  }
  const int half = 1 << (L - 1);
  const Rational* y = v;
  const Rational* z = v + half;
  std::vector<Rational> yy(half), zz(half), ni(half);
  mul_vec(y, y, yy.data(), L - 1, f);
  mul_vec(z, z, zz.data(), L - 1, f);
  const Rational& g = f.gen(L - 1);
  for (int i = 0; i < half; ++i) yy[i] -= zz[i] * g;
  inverse_vec(yy.data(), ni.data(), L - 1, f);
  mul_vec(y, ni.data(), out, L - 1, f);
  mul_vec(z, ni.data(), out + half, L - 1, f);
  for (int i = 0; i < half; ++i) out[half + i] = -out[half + i];
}

}  // namespace

std::shared_ptr<const MQField> MQField::generated_by(const std::vector<Rational>& candidates) {
  auto f = std::make_shared<MQField>();
  Rows rows;
  for (const auto& q : candidates) {
    if (q.sign() <= 0) throw Error(Errc::InvalidArgument, "field generator must be positive");
    mpz_class k;
    squarefree_split(q, nullptr, &k);
    if (k == 1) continue;
    std::vector<char> v(f->primes_.size(), 0);
    for (const auto& p : factor_squarefree(k)) {
      auto it = std::find(f->primes_.begin(), f->primes_.end(), p);
      if (it == f->primes_.end()) {
        f->primes_.push_back(p);
        v.push_back(1);
        for (auto& r : rows) r.bits.push_back(0);
      } else {
        v[it - f->primes_.begin()] ^= 1;
      }
    }
    int mask = 1 << f->gens();
    reduce(v, mask, rows);
    int piv = first_set(v);
    if (piv < 0) continue;  // already in the field
    f->gens_.push_back(Rational(k));
    rows.push_back({v, mask, piv});
  }
  f->prime_sets_.clear();
  for (auto& r : rows) {
    std::vector<int> row(r.bits.begin(), r.bits.end());
    row.push_back(r.mask);
    row.push_back(r.pivot);
    f->prime_sets_.push_back(std::move(row));
  }
  const int n = f->dim();
  f->coef_.assign(static_cast<std::size_t>(n) * n, Rational(1));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      Rational c(1);
      for (int i = 0; i < f->gens(); ++i)
        if ((s >> i & 1) && (t >> i & 1)) c *= f->gens_[i];
      f->coef_[s * n + t] = c;
    }
  return f;
}

bool MQField::sqrt_of(const Rational& q, Rational* c, int* mask) const {
  if (q.sign() < 0) return false;
  if (q.is_zero()) {
    *c = Rational();
    *mask = 0;
    return true;
  }
  Rational c0;
  mpz_class k;
  squarefree_split(q, &c0, &k);
  std::vector<char> v(primes_.size(), 0);
  if (k != 1) {
    for (const auto& p : factor_squarefree(k)) {
      auto it = std::find(primes_.begin(), primes_.end(), p);
      if (it == primes_.end()) return false;
      v[it - primes_.begin()] ^= 1;
    }
  }
  Rows rows;
  for (const auto& r : prime_sets_) {
    Row row;
    row.bits.assign(r.begin(), r.end() - 2);
    row.mask = r[r.size() - 2];
    row.pivot = r.back();
    rows.push_back(std::move(row));
  }
  int m = 0;
  reduce(v, m, rows);
  if (first_set(v) >= 0) return false;
  // k = prod_{i in m} g_i * t^2
  Rational prod(1);
  for (int i = 0; i < gens(); ++i)
    if (m >> i & 1) prod *= gens_[i];
  Rational t;
  if (!rational_sqrt(Rational(k) / prod, &t)) return false;
  *c = c0 * t;
  *mask = m;
  return true;
}

MQ MQ::sqrt_of(const Rational& q, const MQField& f) {
  Rational c;
  int mask = 0;
  if (!f.sqrt_of(q, &c, &mask)) throw Error(Errc::UnsupportedMaster, "sqrt(" + q.str() + ") outside the field");
  std::vector<Rational> v(f.dim());
  v[mask] = c;
  return MQ(&f, std::move(v));
}

MQ MQ::from_quad(const QuadScalar& q, const MQField& f) {
  MQ r(q.a());
  if (q.is_rational()) return r;
  return r + MQ(q.b()) * sqrt_of(q.radicand(), f);
}

bool MQ::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool MQ::is_zero() const { return is_rational() && c_[0].is_zero(); }

const MQField* MQ::common(const MQ& x, const MQ& y) {
  if (!x.f_) return y.f_;
  if (!y.f_ || x.f_ == y.f_) return x.f_;
  throw Error(Errc::RadicandMismatch, "elements of different multi-quadratic fields");
}

std::vector<Rational> MQ::expanded(const MQField* f) const {
  if (f_ == f || !f) return c_;
  std::vector<Rational> v(f->dim());
  v[0] = c_[0];
  return v;
}

MQ operator+(const MQ& x, const MQ& y) {
  const MQField* f = MQ::common(x, y);
  auto a = x.expanded(f), b = y.expanded(f);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return MQ(f, std::move(a));
}

MQ operator-(const MQ& x, const MQ& y) {
  const MQField* f = MQ::common(x, y);
  auto a = x.expanded(f), b = y.expanded(f);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return MQ(f, std::move(a));
}

MQ MQ::operator-() const {
  auto a = c_;
  for (auto& v : a) v = -v;
  return MQ(f_, std::move(a));
}

MQ operator*(const MQ& x, const MQ& y) {
  const MQField* f = MQ::common(x, y);
  if (!f) return MQ(x.c_[0] * y.c_[0]);
  auto a = x.expanded(f), b = y.expanded(f);
  std::vector<Rational> out(f->dim());
  mul_vec(a.data(), b.data(), out.data(), f->gens(), *f);
  return MQ(f, std::move(out));
}

MQ MQ::inverse() const {
  if (!f_) {
    if (c_[0].is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return MQ(c_[0].inverse());
  }
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  std::vector<Rational> out(f_->dim());
  inverse_vec(c_.data(), out.data(), f_->gens(), *f_);
  return MQ(f_, std::move(out));
}

MQ operator/(const MQ& x, const MQ& y) {
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (y.is_rational()) {
    Rational inv = y.c_[0].inverse();
    auto a = x.c_;
    for (auto& v : a) v *= inv;
    return MQ(x.f_, std::move(a));
  }
  return x * y.inverse();
}

bool operator==(const MQ& x, const MQ& y) {
  const MQField* f = MQ::common(x, y);
  return x.expanded(f) == y.expanded(f);
}

int MQ::sign() const {
  if (!f_) return c_[0].sign();
  return sign_vec(c_.data(), f_->gens(), *f_);
}

std::optional<QuadScalar> MQ::to_quad(const Rational& d) const {
  if (!f_ || is_rational()) return QuadScalar(c_[0]);
  Rational c;
  int mask = 0;
  if (d == Rational(1) || !f_->sqrt_of(d, &c, &mask) || mask == 0) return std::nullopt;
  for (int i = 1; i < static_cast<int>(c_.size()); ++i)
    if (i != mask && !c_[i].is_zero()) return std::nullopt;
  return QuadScalar(c_[0], c_[mask] / c, d);
}

}  // namespace gt
