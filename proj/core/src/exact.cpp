#include "jchi/exact.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "jchi/errors.hpp"

namespace jchi {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw InvalidInput("not an exact number: \"" + std::string(whole) + "\"");
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

void Budget::require_subsets(int edges, const char* what) const {
  if (edges > max_edges || edges >= 63 || (std::uint64_t{1} << edges) > max_subsets) {
    throw BudgetExceeded(std::string(what) + ": 2^" + std::to_string(edges) +
                         " edge subsets exceed the configured budget");
  }
}

BigInt BigInt::parse(std::string_view text) { return BigInt(parse_integer(text, text)); }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in 64 bits");
  return v_.get_si();
}

BigInt BigInt::divexact(const BigInt& d) const {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt BigInt::floor_div(const BigInt& d) const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt BigInt::mod(const BigInt& d) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw InvalidInput("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(parse_integer(text, text)));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw InvalidInput("not an exact number: \"" + std::string(text) + "\"");
  }
  return Rational(BigInt(num), BigInt(mpz_class(std::string(den_text), 10)));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const { return num().floor_div(den()); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational bernoulli(unsigned k) {
  if (k >= 3 && k % 2 == 1) return Rational(0);
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  std::vector<Rational> b{Rational(1)};
  b.reserve(k + 1);
  for (unsigned m = 1; m <= k; ++m) {
    Rational acc;
    for (unsigned j = 0; j < m; ++j) {
      if (j >= 3 && j % 2 == 1) continue;
      acc += Rational(binomial(m + 1, j)) * b[j];
    }
    b.push_back(-acc / Rational(static_cast<long long>(m + 1)));
  }
  return b[k];
}

BigInt factorial(unsigned k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return BigInt(std::move(r));
}

BigInt binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigInt(std::move(r));
}

BigInt int_determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input) {
    if (row.size() != n) throw InvalidInput("int_determinant: matrix is not square");
  }
  if (n == 0) return BigInt(1);

  IntMatrix a = input;
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return BigInt(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev);
      }
      a[i][k] = BigInt(0);
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

bool int_determinant_checked(std::vector<std::vector<std::int64_t>> a, std::int64_t& out) {
  const std::size_t n = a.size();
  if (n == 0) {
    out = 1;
    return true;
  }
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) {
        out = 0;
        return true;
      }
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] -
                             static_cast<__int128>(a[i][k]) * a[k][j];
        const __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN) return false;
        a[i][j] = static_cast<std::int64_t>(q);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  out = sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
  return true;
}

}  // namespace jchi
