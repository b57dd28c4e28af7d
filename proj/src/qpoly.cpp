#include "klcx/qpoly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace klcx {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

QPolynomial QPolynomial::constant(std::int64_t c) { return monomial(0, c); }

QPolynomial QPolynomial::monomial(int exponent, std::int64_t c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  QPolynomial p;
  if (c != 0) p.terms_.push_back({exponent, c});
  return p;
}

QPolynomial QPolynomial::from_coefficients(const std::vector<std::int64_t>& coeffs) {
  QPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.push_back({static_cast<int>(i), coeffs[i]});
  return p;
}

std::int64_t QPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coeff : 0;
}

std::vector<std::int64_t> QPolynomial::dense() const {
  std::vector<std::int64_t> out(degree() + 1, 0);
  for (const auto& t : terms_) out[t.exponent] = t.coeff;
  return out;
}

void QPolynomial::add_scaled(const QPolynomial& other, std::int64_t factor, int shift) {
  if (factor == 0 || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + shift)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->exponent + shift < a->exponent) {
      merged.push_back({b->exponent + shift, checked_mul(b->coeff, factor)});
      ++b;
    } else {
      const std::int64_t c = checked_add(a->coeff, checked_mul(b->coeff, factor));
      if (c != 0) merged.push_back({a->exponent, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& t : a.terms_) out.add_scaled(b, t.coeff, t.exponent);
  return out;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

QPolynomial QPolynomial::parse(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("bad polynomial coefficient list: " + std::string(text));
    coeffs.push_back(v);
    pos = end + 1;
  }
  return from_coefficients(coeffs);
}

std::int64_t t_coefficient(const QPolynomial& p, int n) {
  if (n < 0 || n % 2 != 0) return 0;
  return p.coefficient(n / 2);
}

}  // namespace klcx
