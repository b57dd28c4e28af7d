#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klcx {

/// Sparse polynomial in q = t^2 with integer coefficients. Terms are kept
/// sorted by exponent and never store a zero coefficient. Arithmetic is exact
/// and throws std::overflow_error rather than wrapping.
class QPolynomial {
 public:
  struct Term {
    int exponent;
    std::int64_t coeff;
    bool operator==(const Term&) const = default;
  };

  QPolynomial() = default;
  static QPolynomial constant(std::int64_t c);
  static QPolynomial monomial(int exponent, std::int64_t c = 1);
  /// From ascending dense coefficients c0, c1, ...
  static QPolynomial from_coefficients(const std::vector<std::int64_t>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  /// Degree in q; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.back().exponent; }
  std::int64_t coefficient(int exponent) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<std::int64_t> dense() const;

  /// this += factor * q^shift * other.
  void add_scaled(const QPolynomial& other, std::int64_t factor, int shift = 0);

  QPolynomial& operator+=(const QPolynomial& o) { add_scaled(o, 1); return *this; }
  QPolynomial& operator-=(const QPolynomial& o) { add_scaled(o, -1); return *this; }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  bool operator==(const QPolynomial&) const = default;

  /// Ascending coefficients joined by ',' ("0" for zero).
  std::string to_string() const;
  static QPolynomial parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

/// Coefficient of t^n: zero for negative or odd n.
std::int64_t t_coefficient(const QPolynomial& p, int n);

}  // namespace klcx
