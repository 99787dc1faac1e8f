#include "lspath/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace lsp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = make(n, d);
}

Rational Rational::make(__int128 n, __int128 d) {
  if (d < 0) n = -n, d = -d;
  __int128 g = gcd128(n, d);
  if (g > 1) n /= g, d /= g;
  constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
  if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), 0);
}

Rational& Rational::operator+=(const Rational& o) {
  if (d_ == o.d_) return *this = make(static_cast<__int128>(n_) + o.n_, d_);
  return *this = make(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                      static_cast<__int128>(d_) * o.d_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (d_ == 1 && o.d_ == 1) return *this = make(static_cast<__int128>(n_) * o.n_, 1);
  return *this = make(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.n_ == 0) throw std::domain_error("rational division by zero");
  return *this = make(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
}

std::int64_t floor_of(const Rational& q) {
  std::int64_t n = q.numerator(), d = q.denominator();
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

std::int64_t ceil_of(const Rational& q) {
  return -floor_of(-q);
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

int sign_of(const Rational& q) {
  return q.numerator() > 0 ? 1 : (q.numerator() < 0 ? -1 : 0);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    std::int64_t n = std::stoll(ns, &used);
    if (used != ns.size()) throw std::invalid_argument(s);
    std::int64_t d = std::stoll(ds, &used);
    if (used != ds.size() || d == 0) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

Covector Covector::from_ints(const std::vector<std::int64_t>& xs) {
  Covector v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v.c_[i] = Rational(xs[i]);
  return v;
}

bool Covector::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Covector::is_integral() const {
  for (const auto& x : c_)
    if (x.denominator() != 1) return false;
  return true;
}

std::vector<std::int64_t> Covector::to_ints() const {
  std::vector<std::int64_t> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    if (x.denominator() != 1) throw std::domain_error("covector not integral: " + str());
    out.push_back(x.numerator());
  }
  return out;
}

Covector& Covector::operator+=(const Covector& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Covector& Covector::operator-=(const Covector& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Covector& Covector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool operator<(const Covector& a, const Covector& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return a.size() < b.size();
}

std::string Covector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += to_string(c_[i]);
  }
  return s + ")";
}

std::size_t CovectorHash::operator()(const Covector& v) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& x : v.coords()) {
    h ^= static_cast<std::size_t>(x.numerator()) * 1099511628211ull;
    h = (h << 7) ^ (h >> 3) ^ static_cast<std::size_t>(x.denominator());
  }
  return h;
}

}  // namespace lsp
