#pragma once

// Exact integer and rational arithmetic. Every Euler characteristic in this
// library is a Rational; nothing is ever rounded.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace jchi {

/// Arbitrary-precision signed integer.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer; throws InvalidInput.
  static BigInt parse(std::string_view text);

  std::string to_string() const { return v_.get_str(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const { return v_.fits_slong_p(); }
  std::int64_t to_int64() const;

  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

  /// Division that must be exact (Bareiss steps, factorial quotients).
  BigInt divexact(const BigInt& d) const;
  /// Floor division and the matching non-negative remainder for d > 0.
  BigInt floor_div(const BigInt& d) const;
  BigInt mod(const BigInt& d) const;

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const BigInt& v) : v_(v.raw()) {}             // NOLINT(implicit)
  /// Throws InvalidInput on a zero denominator.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p/q" and "p"; the result is normalized. Throws InvalidInput.
  static Rational parse(std::string_view text);

  /// Lowest terms, "-1/12" form; integers print without "/1".
  std::string to_string() const;

  BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  BigInt floor() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// B_k with B_1 = -1/2 and B_2 = 1/6.
Rational bernoulli(unsigned k);

BigInt factorial(unsigned k);

BigInt binomial(unsigned n, unsigned k);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free (Bareiss) elimination; the 0x0 matrix
/// has determinant 1. Throws InvalidInput if the matrix is not square.
BigInt int_determinant(const IntMatrix& m);

/// Same elimination on machine integers. Returns false if an intermediate
/// would overflow, leaving `out` unspecified.
bool int_determinant_checked(std::vector<std::vector<std::int64_t>> m, std::int64_t& out);

}  // namespace jchi
