#include "klcx/rootsys.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace klcx {

namespace {

using Rational = boost::rational<std::int64_t>;

void check_classification(RootType type, int rank) {
  const std::string label = std::string(1, static_cast<char>(type)) + std::to_string(rank);
  bool ok = false;
  switch (type) {
    case RootType::A: ok = rank >= 1 && rank <= 32; break;
    case RootType::B: ok = rank >= 2 && rank <= 32; break;
    case RootType::C: ok = rank >= 2 && rank <= 32; break;
    case RootType::D: ok = rank >= 4 && rank <= 32; break;
    case RootType::E: ok = rank >= 6 && rank <= 8; break;
    case RootType::F: ok = rank == 4; break;
    case RootType::G: ok = rank == 2; break;
  }
  if (!ok) throw DomainError("not an irreducible root system type: " + label);
}

// Squared lengths of the simple roots and the edges of the Dynkin diagram,
// encoded directly as the Gram matrix.
IntMatrix gram_matrix(RootType type, int r) {
  IntMatrix g = IntMatrix::Zero(r, r);
  auto link = [&g](int i, int j, std::int64_t v) { g(i, j) = g(j, i) = v; };
  switch (type) {
    case RootType::A:
    case RootType::D:
    case RootType::E:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      break;
    case RootType::B:
      for (int i = 0; i < r; ++i) g(i, i) = (i + 1 < r) ? 4 : 2;
      break;
    case RootType::C:
      for (int i = 0; i < r; ++i) g(i, i) = (i + 1 < r) ? 2 : 4;
      break;
    case RootType::F:
      g.diagonal() << 4, 4, 2, 2;
      break;
    case RootType::G:
      g.diagonal() << 2, 6;
      break;
  }
  switch (type) {
    case RootType::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case RootType::B:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -2);
      link(r - 2, r - 1, -2);
      break;
    case RootType::C:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 2, r - 1, -2);
      break;
    case RootType::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 3, r - 1, -1);
      break;
    case RootType::E:
      // 1 - 3 - 4 - 5 - ... with 2 attached to 4.
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case RootType::F:
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case RootType::G:
      link(0, 1, -3);
      break;
  }
  return g;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

struct VecLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

}  // namespace

std::int64_t height(const IntVector& root) { return root.sum(); }

bool is_dominant(const Weight& lambda) { return (lambda.coords.array() >= 0).all(); }

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
  check_classification(type, rank);
  gram_ = gram_matrix(type, rank);
  cartan_ = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_(i, j) = 2 * gram_(i, j) / gram_(j, j);

  // Closure of the simple roots under simple reflections.
  std::set<IntVector, VecLess> roots;
  std::vector<IntVector> frontier;
  for (int i = 0; i < rank; ++i) {
    frontier.push_back(simple_root(i));
    roots.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& v : frontier)
      for (int i = 0; i < rank; ++i) {
        IntVector w = reflect(v, i);
        if (roots.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  for (const auto& v : roots) {
    if ((v.array() >= 0).all()) positive_.push_back(v);
    else if (!(v.array() <= 0).all()) throw std::logic_error("root with mixed signs");
  }
  std::sort(positive_.begin(), positive_.end(), [](const IntVector& a, const IntVector& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return lex_less(a, b);
  });

  const std::int64_t short_length = gram_.diagonal().minCoeff();
  for (const auto& v : positive_)
    if (squared_length(v) == short_length) alpha0_ = v;
  coxeter_number_ = static_cast<int>(coroot_pairing(rho(), alpha0_)) + 1;

  // Exact inverse of A^T by Gauss-Jordan over the rationals.
  const int n = rank;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(cartan_(j, i));
    m[i][n + i] = Rational(1);
  }
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (m[p][c] == Rational(0)) ++p;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    const Rational pivot = m[c][c];
    det *= pivot;
    for (auto& e : m[c]) e /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == Rational(0)) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::int64_t denom = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) denom = std::lcm(denom, m[i][n + j].denominator());
  inverse_denominator_ = denom;
  inverse_numerator_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational e = m[i][n + j] * Rational(denom);
      inverse_numerator_(i, j) = e.numerator();
    }
}

std::string RootSystem::label() const {
  return std::string(1, static_cast<char>(type_)) + std::to_string(rank_);
}

IntVector RootSystem::simple_root(int i) const {
  IntVector e = IntVector::Zero(rank_);
  e(i) = 1;
  return e;
}

std::int64_t RootSystem::coroot_pairing(const IntVector& u, const IntVector& gamma) const {
  const std::int64_t num = 2 * inner(u, gamma);
  const std::int64_t den = squared_length(gamma);
  if (num % den != 0) throw std::logic_error("non-integral coroot pairing");
  return num / den;
}

std::int64_t RootSystem::coroot_pairing(const Weight& lambda, const IntVector& gamma) const {
  // gamma^vee = sum_i gamma_i (alpha_i, alpha_i)/(gamma, gamma) alpha_i^vee.
  std::int64_t num = 0;
  for (int i = 0; i < rank_; ++i) num += gamma(i) * gram_(i, i) * lambda.coords(i);
  const std::int64_t den = squared_length(gamma);
  if (num % den != 0) throw std::logic_error("non-integral coroot pairing");
  return num / den;
}

Weight RootSystem::to_weight(const IntVector& root_coords) const {
  return Weight{cartan_.transpose() * root_coords};
}

std::optional<IntVector> RootSystem::to_root_coords(const Weight& lambda) const {
  IntVector scaled = inverse_numerator_ * lambda.coords;
  for (Eigen::Index i = 0; i < scaled.size(); ++i)
    if (scaled(i) % inverse_denominator_ != 0) return std::nullopt;
  IntVector beta = scaled / inverse_denominator_;
  if (to_weight(beta).coords != lambda.coords) throw std::logic_error("root coordinate conversion");
  return beta;
}

IntVector RootSystem::reflect(const IntVector& v, int i) const {
  IntVector w = v;
  w(i) -= v.dot(cartan_.col(i));
  return w;
}

bool RootSystem::is_root(const IntVector& v) const {
  for (const auto& p : positive_)
    if (p == v || p == -v) return true;
  return false;
}

std::pair<RootType, int> parse_type_label(std::string_view label) {
  if (label.size() < 2) throw DomainError("bad root system label: " + std::string(label));
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (t < 'A' || t > 'G') throw DomainError("bad root system type: " + std::string(label));
  int rank = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), rank);
  if (ec != std::errc() || ptr != label.data() + label.size())
    throw DomainError("bad root system rank: " + std::string(label));
  return {static_cast<RootType>(t), rank};
}

RootSystem build_root_system(RootType type, int rank) { return RootSystem(type, rank); }

RootSystem build_root_system(std::string_view label) {
  auto [t, r] = parse_type_label(label);
  return RootSystem(t, r);
}

std::vector<IntVector> compute_phi0(const RootSystem& rs, int l) {
  if (l < 2) throw DomainError("compute_phi0 needs l >= 2");
  std::vector<IntVector> out;
  for (const auto& a : rs.positive_roots())
    if (rs.coroot_pairing(rs.rho(), a) % l == 0) out.push_back(a);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  return out;
}

bool is_exceptional(const RootSystem& rs, int l) {
  if (l < 2) throw DomainError("is_exceptional needs l >= 2");
  const RootType t = rs.type();
  const int r = rs.rank();
  // (i)
  if (l % 2 == 0) return true;
  if (t == RootType::G && l % 3 == 0) return true;
  // (ii) bad primes
  switch (t) {
    case RootType::B:
    case RootType::C:
    case RootType::D:
      if (l == 2) return true;
      break;
    case RootType::E:
      if (l == 2 || l == 3) return true;
      if (r == 8 && l == 5) return true;
      break;
    case RootType::F:
    case RootType::G:
      if (l == 2 || l == 3) return true;
      break;
    case RootType::A:
      break;
  }
  // (iii)
  if (t == RootType::A && (r + 1) % l == 0) return true;
  // (iv)
  if (t == RootType::E && r == 6 && l == 9) return true;
  if (t == RootType::E && r == 8 && (l == 7 || l == 9)) return true;
  return false;
}

int default_weight_modulus(const RootSystem& rs) {
  int l = rs.coxeter_number() + 1;
  while (is_exceptional(rs, l)) ++l;
  return l;
}

}  // namespace klcx
