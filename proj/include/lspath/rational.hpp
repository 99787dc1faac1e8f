#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lsp {

// Exact rational over int64 in lowest terms, denominator > 0. Intermediate
// products use 128-bit integers; results that do not fit throw overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : n_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t numerator() const { return n_; }
  std::int64_t denominator() const { return d_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.n_, a.d_, 0); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.d_ == b.d_) return a.n_ <=> b.n_;
    return static_cast<__int128>(a.n_) * b.d_ <=> static_cast<__int128>(b.n_) * a.d_;
  }

 private:
  Rational(std::int64_t n, std::int64_t d, int) : n_(n), d_(d) {}  // already normalized
  static Rational make(__int128 n, __int128 d);
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);
bool is_integer(const Rational& q);
int sign_of(const Rational& q);

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Fixed-rank vector of rationals in the fundamental-coweight basis.
class Covector {
 public:
  Covector() = default;
  explicit Covector(std::size_t n) : c_(n, Rational(0)) {}
  Covector(std::initializer_list<Rational> xs) : c_(xs) {}
  explicit Covector(std::vector<Rational> xs) : c_(std::move(xs)) {}

  static Covector from_ints(const std::vector<std::int64_t>& xs);

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;
  std::vector<std::int64_t> to_ints() const;  // throws unless integral

  Covector& operator+=(const Covector& o);
  Covector& operator-=(const Covector& o);
  Covector& operator*=(const Rational& s);

  friend Covector operator+(Covector a, const Covector& b) { return a += b; }
  friend Covector operator-(Covector a, const Covector& b) { return a -= b; }
  friend Covector operator*(Covector a, const Rational& s) { return a *= s; }
  friend Covector operator*(const Rational& s, Covector a) { return a *= s; }
  friend Covector operator-(Covector a) { return a *= Rational(-1); }

  friend bool operator==(const Covector& a, const Covector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Covector& a, const Covector& b) { return !(a == b); }
  friend bool operator<(const Covector& a, const Covector& b);

  std::string str() const;  // "(a,b,...)"

 private:
  std::vector<Rational> c_;
};

struct CovectorHash {
  std::size_t operator()(const Covector& v) const;
};

}  // namespace lsp
