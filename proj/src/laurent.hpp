#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace affschur {

/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den);
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational Laurent polynomial in the formal parameter `a`.
///
/// Stored sparsely as exponent -> nonzero coefficient. The same type doubles
/// as a polynomial in the loop variable `t` wherever periodic matrices are
/// turned into n x n Laurent matrices.
class Laurent {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  Laurent() = default;
  Laurent(long value);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& coeff, std::int64_t exponent);
  static Laurent param() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coeff(std::int64_t exponent) const;
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
  friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
  friend Laurent operator*(const Laurent& x, const Laurent& y);
  Laurent operator-() const;
  friend bool operator==(const Laurent& x, const Laurent& y);

  /// Integer power; negative exponents are only defined for monomials.
  Laurent pow(std::int64_t k) const;

  /// Substitute a := a0. Rejects a0 = 0.
  Rational eval(const Rational& a0) const;
  /// Substitute a := value, where value is any Laurent polynomial. Negative
  /// exponents require `value` to be a monomial.
  Laurent substitute(const Laurent& value) const;

  std::string to_string() const;
  std::string to_string(char variable) const;
  static Laurent parse(std::string_view text);

 private:
  void add_term(std::int64_t exponent, const Rational& c);
  Terms terms_;
};

}  // namespace affschur
