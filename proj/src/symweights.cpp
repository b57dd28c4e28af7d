#include "klcx/symweights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace klcx {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimitError("multiplicity count overflows 64 bits");
  return r;
}

// Dense counting over the box [0, bound_i]: dp[k][v] = #multisets of k positive
// roots summing to v. Roots have nonnegative coordinates, so v + beta follows v
// in row-major order and one forward pass per root allows repeated parts.
struct BoxCounter {
  std::vector<int> dims;
  std::vector<std::size_t> strides;
  std::size_t volume = 1;
  std::vector<std::vector<std::int64_t>> dp;

  BoxCounter(const RootSystem& rs, int m, const IntVector& bound, const SymmetricLimits& limits) {
    const int r = rs.rank();
    dims.resize(r);
    strides.resize(r);
    for (int i = 0; i < r; ++i) dims[i] = static_cast<int>(bound(i)) + 1;
    for (int i = r - 1; i >= 0; --i) {
      strides[i] = volume;
      if (volume > limits.max_states / static_cast<std::size_t>(dims[i]))
        throw ResourceLimitError("weight multiplicity box too large");
      volume *= dims[i];
    }
    if (volume * static_cast<std::size_t>(m + 1) > limits.max_states)
      throw ResourceLimitError("weight multiplicity table exceeds " + std::to_string(limits.max_states) + " states");
    dp.assign(m + 1, std::vector<std::int64_t>(volume, 0));
    dp[0][0] = 1;
    std::vector<int> coord(r);
    for (const auto& beta : rs.positive_roots()) {
      bool fits = true;
      for (int i = 0; i < r; ++i) fits = fits && beta(i) < dims[i];
      if (!fits) continue;
      std::size_t shift = 0;
      for (int i = 0; i < r; ++i) shift += static_cast<std::size_t>(beta(i)) * strides[i];
      for (int k = 0; k < m; ++k) {
        const auto& src = dp[k];
        auto& dst = dp[k + 1];
        std::fill(coord.begin(), coord.end(), 0);
        for (std::size_t idx = 0; idx < volume; ++idx) {
          if (idx) {
            for (int i = r - 1; i >= 0; --i) {
              if (++coord[i] < dims[i]) break;
              coord[i] = 0;
            }
          }
          if (src[idx] == 0) continue;
          bool inside = true;
          for (int i = 0; i < r && inside; ++i) inside = coord[i] + beta(i) < dims[i];
          if (inside) dst[idx + shift] = add_checked(dst[idx + shift], src[idx]);
        }
      }
    }
  }
};

}  // namespace

std::int64_t weight_multiplicity(const RootSystem& rs, int m, const IntVector& sigma, const SymmetricLimits& limits) {
  if (m < 0) throw DomainError("number of parts must be nonnegative");
  if (sigma.size() != rs.rank()) throw DomainError("weight has the wrong rank");
  if ((sigma.array() < 0).any()) return 0;
  const std::int64_t h = height(sigma);
  if (h < m || h > m * height(rs.highest_root())) return 0;
  BoxCounter box(rs, m, sigma, limits);
  return box.dp[m][box.volume - 1];
}

MultiplicityTable::MultiplicityTable(const RootSystem& rs, int m, const SymmetricLimits& limits) : m_(m) {
  if (m < 0) throw DomainError("number of parts must be nonnegative");
  BoxCounter box(rs, m, rs.highest_root() * m, limits);
  dims_ = std::move(box.dims);
  strides_ = std::move(box.strides);
  volume_ = box.volume;
  dp_ = std::move(box.dp);
}

IntVector MultiplicityTable::unflatten(std::size_t idx) const {
  IntVector v(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    v(i) = static_cast<std::int64_t>(idx / strides_[i]);
    idx %= strides_[i];
  }
  return v;
}

std::int64_t MultiplicityTable::count(int k, const IntVector& sigma) const {
  if (k < 0 || k > m_) throw DomainError("part count outside the table");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (sigma(i) < 0 || sigma(i) >= dims_[i]) return 0;
    idx += static_cast<std::size_t>(sigma(i)) * strides_[i];
  }
  return dp_[k][idx];
}

std::vector<std::pair<IntVector, std::int64_t>> MultiplicityTable::weights(int k) const {
  std::vector<std::pair<IntVector, std::int64_t>> out;
  for (std::size_t idx = 0; idx < volume_; ++idx)
    if (dp_[k][idx] != 0) out.emplace_back(unflatten(idx), dp_[k][idx]);
  return out;
}

std::pair<IntVector, std::int64_t> MultiplicityTable::max_weight(int k) const {
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < volume_; ++idx)
    if (dp_[k][idx] > dp_[k][best]) best = idx;
  return {unflatten(best), dp_[k][best]};
}

std::int64_t MultiplicityTable::total(int k) const {
  std::int64_t t = 0;
  for (auto c : dp_[k]) t = add_checked(t, c);
  return t;
}

std::pair<IntVector, std::int64_t> max_multiplicity(const RootSystem& rs, int m, const SymmetricLimits& limits) {
  return MultiplicityTable(rs, m, limits).max_weight(m);
}

TripleSet build_triples(const RootSystem& rs, std::vector<int> ordering) {
  const int r = rs.rank();
  if (r < 3) throw DomainError("triples need rank >= 3, got " + rs.label());
  if (ordering.empty()) {
    ordering.resize(r);
    std::iota(ordering.begin(), ordering.end(), 0);
  }
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < r; ++i)
    if (static_cast<int>(sorted.size()) != r || sorted[i] != i) throw DomainError("ordering is not a permutation of the simple roots");
  std::vector<int> position(r);
  for (int i = 0; i < r; ++i) position[ordering[i]] = i;

  TripleSet out;
  out.ordering = ordering;
  out.tau_phi = IntVector::Zero(r);
  const IntMatrix& g = rs.gram();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        if (a == b || b == c || a == c) continue;
        if (position[c] <= position[a]) continue;
        if (g(a, b) == 0 || g(b, c) == 0) continue;
        out.triples.push_back({a, b, c});
        out.tau_phi(a) += 1;
        out.tau_phi(b) += 2;
        out.tau_phi(c) += 1;
      }
  // Sort by the positions of (alpha, beta, gamma) so enumeration follows the order.
  std::sort(out.triples.begin(), out.triples.end(), [&](const auto& x, const auto& y) {
    return std::make_tuple(position[x[0]], position[x[1]], position[x[2]]) <
           std::make_tuple(position[y[0]], position[y[1]], position[y[2]]);
  });
  return out;
}

TripleWitness triple_witness(const RootSystem& rs, int n, const SymmetricLimits& limits) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const TripleSet ts = build_triples(rs);
  const int r = rs.rank();
  const int t = static_cast<int>(ts.triples.size());

  TripleWitness w;
  w.n = n;
  w.m = 3 * n * t;
  w.target = ts.tau_phi * n;
  w.count = weight_multiplicity(rs, w.m, w.target, limits);
  w.bound = 1;
  for (int i = 0; i < t; ++i) w.bound *= (n + 1);

  const auto& roots = rs.positive_roots();
  auto root_index = [&](const IntVector& v) {
    auto it = std::find(roots.begin(), roots.end(), v);
    if (it == roots.end()) throw std::logic_error("triple produced a non-root");
    return static_cast<int>(it - roots.begin());
  };
  auto e = [&](int i) { return rs.simple_root(i); };
  std::vector<std::array<int, 3>> left(t), right(t);
  for (int i = 0; i < t; ++i) {
    const auto [a, b, c] = ts.triples[i];
    left[i] = {root_index(e(a) + e(b)), root_index(e(b)), root_index(e(c))};
    right[i] = {root_index(e(a)), root_index(e(b)), root_index(e(b) + e(c))};
  }

  std::set<std::vector<int>> distinct;
  std::vector<int> choice(t, 0);
  std::int64_t generated = 0;
  while (true) {
    std::vector<int> mult(roots.size(), 0);
    for (int i = 0; i < t; ++i)
      for (int k = 0; k < 3; ++k) {
        mult[left[i][k]] += choice[i];
        mult[right[i][k]] += n - choice[i];
      }
    IntVector sum = IntVector::Zero(r);
    int parts = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      sum += roots[j] * mult[j];
      parts += mult[j];
    }
    if (sum != w.target || parts != w.m) throw std::logic_error("constructed partition has the wrong shape");
    distinct.insert(std::move(mult));
    ++generated;
    int i = 0;
    while (i < t && choice[i] == n) choice[i++] = 0;
    if (i == t) break;
    ++choice[i];
  }
  w.distinct_partitions = static_cast<std::int64_t>(distinct.size());
  w.distinct_ok = w.distinct_partitions == generated && generated == w.bound;
  w.bound_ok = w.count >= w.bound;
  return w;
}

GrowthSequence s_phi_estimate(const RootSystem& rs, int N, const SymmetricLimits& limits) {
  if (N < 8) throw DomainError("s(Phi) estimate needs N >= 8");
  MultiplicityTable table(rs, N, limits);
  GrowthSequence seq;
  seq.truncation_L = N;
  for (int k = 0; k <= N; ++k) {
    seq.terms.push_back(table.max_weight(k).second);
    seq.stabilized.push_back(true);
  }
  seq.window = {std::max(1, (N + 1) / 2), N};
  seq.estimated_gamma = estimate_gamma(seq.terms, seq.window.first, seq.window.second);
  return seq;
}

}  // namespace klcx
