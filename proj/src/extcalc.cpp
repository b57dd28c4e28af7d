#include "klcx/extcalc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace klcx {

namespace {

void require_wplus(const GroupTable& g, int x) {
  if (!is_wplus(g, x)) throw DomainError("element is not in W+: " + g.word_string(x));
}

// Statistics are reported at L and checked at L+1, L+2.
void require_window(const KLTable& kl, int L) {
  if (L < 0) throw DomainError("truncation bound must be nonnegative");
  if (L + 2 > kl.max_length())
    throw TruncationError("statistic at L=" + std::to_string(L) + " needs a KL table to length " +
                          std::to_string(L + 2) + ", have " + std::to_string(kl.max_length()));
}

std::vector<int> wplus_up_to(const GroupTable& g, int L) {
  std::vector<int> out;
  for (int x : enumerate_wplus(g))
    if (g.length(x) <= L) out.push_back(x);
  return out;
}

TruncatedStat windowed(const std::int64_t (&values)[3], int L) {
  return TruncatedStat{values[0], L, values[0] == values[1] && values[1] == values[2]};
}

std::int64_t ext_unchecked(const KLTable& kl, const std::vector<int>& wplus, int x, int y, int n) {
  const GroupTable& g = kl.group();
  const int lx = g.length(x);
  const int ly = g.length(y);
  if (((lx - ly - n) % 2 + 2) % 2 != 0) return 0;
  std::int64_t total = 0;
  for (int z : wplus) {
    const int lz = g.length(z);
    if (lz > lx || lz > ly) break;
    const QPolynomial& px = kl.polynomial(z, x);
    if (px.is_zero()) continue;
    const QPolynomial& py = kl.polynomial(z, y);
    if (py.is_zero()) continue;
    for (int a = 0; a <= n; ++a)
      total += t_coefficient(px, lx - lz - a) * t_coefficient(py, ly - lz - (n - a));
  }
  return total;
}

}  // namespace

std::int64_t ext_L_nabla(const KLTable& kl, int x, int z, int n) {
  const GroupTable& g = kl.group();
  require_wplus(g, x);
  require_wplus(g, z);
  if (n < 0) return 0;
  return t_coefficient(kl.polynomial(z, x), g.length(x) - g.length(z) - n);
}

std::int64_t ext_L_L(const KLTable& kl, int x, int y, int n) {
  const GroupTable& g = kl.group();
  require_wplus(g, x);
  require_wplus(g, y);
  if (n < 0) return 0;
  return ext_unchecked(kl, enumerate_wplus(g), x, y, n);
}

bool a1_region(int X, int Y, int n) {
  if (X < 1 || Y < 1 || n < 0) return false;
  return std::abs(X - Y) <= n && n <= X + Y - 2 && (X + Y - n) % 2 == 0;
}

TruncatedStat sum_over_nu(const KLTable& kl, int x, int n, int L) {
  const GroupTable& g = kl.group();
  require_wplus(g, x);
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (L < g.length(x) + n)
    throw TruncationError("sum over nu needs L >= l(x) + n = " + std::to_string(g.length(x) + n));
  require_window(kl, L);
  const auto wplus = wplus_up_to(g, L + 2);
  std::int64_t values[3] = {0, 0, 0};
  for (int y : wplus) {
    const std::int64_t e = ext_unchecked(kl, wplus, x, y, n);
    for (int w = 0; w < 3; ++w)
      if (g.length(y) <= L + w) values[w] += e;
  }
  return windowed(values, L);
}

TruncatedStat c_n_max(const KLTable& kl, int n, int L) {
  const GroupTable& g = kl.group();
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (L < n) throw TruncationError("C^(n) needs L >= n");
  require_window(kl, L);
  const auto wplus = wplus_up_to(g, L + 2);
  std::int64_t values[3] = {0, 0, 0};
  for (int x : wplus)
    for (int y : wplus) {
      const int top = std::max(g.length(x), g.length(y));
      const std::int64_t c = t_coefficient(kl.polynomial(y, x), g.length(x) - g.length(y) - n);
      for (int w = 0; w < 3; ++w)
        if (top <= L + w) values[w] = std::max(values[w], c);
    }
  return windowed(values, L);
}

std::pair<GrowthSequence, GrowthSequence> cx_sequences(const KLTable& kl, int N, int L) {
  const GroupTable& g = kl.group();
  if (N < 0) throw DomainError("degree bound must be nonnegative");
  const auto all_wplus = enumerate_wplus(g);
  const int min_length = all_wplus.empty() ? kl.max_length() + 1 : g.length(all_wplus.front());
  if (L < N + min_length)
    throw TruncationError("complexity sequences need L >= N + l(w0) = " + std::to_string(N + min_length));
  require_window(kl, L);
  const auto wplus = wplus_up_to(g, L + 2);

  GrowthSequence cx, Cx;
  cx.truncation_L = Cx.truncation_L = L;
  for (int n = 0; n <= N; ++n) {
    std::int64_t max_pair[3] = {0, 0, 0};
    std::int64_t max_row[3] = {0, 0, 0};
    for (int x : wplus) {
      const int lx = g.length(x);
      if (lx > L + 2 - n) break;
      std::int64_t row[3] = {0, 0, 0};
      for (int y : wplus) {
        const int ly = g.length(y);
        const std::int64_t e = ext_unchecked(kl, wplus, x, y, n);
        for (int w = 0; w < 3; ++w) {
          if (ly <= L + w) row[w] += e;
          if (lx <= L + w - n && ly <= L + w - n) max_pair[w] = std::max(max_pair[w], e);
        }
      }
      for (int w = 0; w < 3; ++w)
        if (lx <= L + w - n) max_row[w] = std::max(max_row[w], row[w]);
    }
    const auto a = windowed(max_pair, L);
    const auto b = windowed(max_row, L);
    cx.terms.push_back(a.value);
    cx.stabilized.push_back(a.stabilized);
    Cx.terms.push_back(b.value);
    Cx.stabilized.push_back(b.stabilized);
  }
  const std::pair<int, int> window{std::max(1, (N + 1) / 2), N};
  cx.window = Cx.window = window;
  cx.estimated_gamma = estimate_gamma(cx.terms, window.first, window.second);
  Cx.estimated_gamma = estimate_gamma(Cx.terms, window.first, window.second);
  return {std::move(cx), std::move(Cx)};
}

std::optional<double> estimate_gamma(std::span<const std::int64_t> terms, int lo, int hi) {
  std::vector<double> xs, ys;
  for (int n = std::max(lo, 1); n <= hi && n < static_cast<int>(terms.size()); ++n) {
    if (terms[n] <= 0) continue;
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(terms[n])));
  }
  if (xs.size() < 4) return std::nullopt;
  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx + 1.0;
}

std::optional<double> estimate_gamma(std::span<const std::int64_t> terms) {
  const int N = static_cast<int>(terms.size()) - 1;
  return estimate_gamma(terms, std::max(1, (N + 1) / 2), N);
}

Weight wplus_weight(const RootSystem& rs, const AffineElement& w, int l) {
  Weight minus_two_rho{-2 * rs.rho().coords};
  return dot_action(rs, w, minus_two_rho, l);
}

bool weight_less(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
  const auto diff = rs.to_root_coords(Weight{nu.coords - lambda.coords});
  if (!diff) return false;
  return (diff->array() >= 0).all() && diff->sum() > 0;
}

TruncatedStat zigzag_bound(const KLTable& kl, int x, int n, int L, int l) {
  const GroupTable& g = kl.group();
  const RootSystem& rs = g.root_system();
  require_wplus(g, x);
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (L < g.length(x) + n + 2)
    throw TruncationError("zigzag bound needs L >= l(x) + n + 2 = " + std::to_string(g.length(x) + n + 2));
  require_window(kl, L);
  if (l == 0) l = default_weight_modulus(rs);

  const auto wplus = wplus_up_to(g, L + 2);
  const int m = static_cast<int>(wplus.size());
  std::vector<Weight> weights;
  weights.reserve(m);
  for (int w : wplus) weights.push_back(wplus_weight(rs, g.element(w), l));

  // down[i][j] = mu when weight j < weight i; up is the transpose relation.
  std::vector<std::vector<std::pair<int, std::int64_t>>> down(m), up(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::int64_t mu = kl.mu(wplus[i], wplus[j]);
      if (mu == 0) continue;
      if (weight_less(rs, weights[j], weights[i])) down[i].emplace_back(j, mu);
      if (weight_less(rs, weights[i], weights[j])) up[i].emplace_back(j, mu);
    }

  const int start = static_cast<int>(std::find(wplus.begin(), wplus.end(), x) - wplus.begin());
  std::int64_t values[3] = {0, 0, 0};
  for (int w = 0; w < 3; ++w) {
    const int bound = L + w;
    auto step = [&](const std::vector<std::int64_t>& v, const auto& edges) {
      std::vector<std::int64_t> out(m, 0);
      for (int i = 0; i < m; ++i) {
        if (v[i] == 0) continue;
        for (const auto& [j, mu] : edges[i])
          if (g.length(wplus[j]) <= bound) out[j] += v[i] * mu;
      }
      return out;
    };
    std::vector<std::int64_t> descending(m, 0);
    descending[start] = 1;
    std::int64_t total = 0;
    for (int s = 0; s <= n; ++s) {
      if (s > 0) descending = step(descending, down);
      std::vector<std::int64_t> v = descending;
      for (int k = s; k < n; ++k) v = step(v, up);
      for (auto c : v) total += c;
    }
    values[w] = total;
  }
  return windowed(values, L);
}

MuRowSums mu_row_sums(const KLTable& kl, int L) {
  const GroupTable& g = kl.group();
  require_window(kl, L);
  const auto wplus = wplus_up_to(g, L + 2);
  MuRowSums out;
  std::int64_t best[3] = {0, 0, 0};
  bool any = false;
  for (int x : wplus) {
    std::int64_t row[3] = {0, 0, 0};
    for (int y : wplus) {
      if (y == x) continue;
      const std::int64_t mu = kl.mu(x, y);
      for (int w = 0; w < 3; ++w)
        if (g.length(y) <= L + w) row[w] += mu;
    }
    for (int w = 0; w < 3; ++w)
      if (g.length(x) <= L + w) best[w] = std::max(best[w], row[w]);
    if (g.length(x) <= L) {
      out.rows.emplace_back(x, windowed(row, L));
      any = true;
    }
  }
  if (any) {
    out.R = windowed(best, L);
    out.R_prime = out.rows.front().second;
  }
  return out;
}

}  // namespace klcx
