#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "klcx/kltable.hpp"

namespace klcx {

/// A statistic over the infinite poset W+ evaluated on the finite window of
/// elements with length <= truncation_L. `stabilized` records that the value
/// is unchanged at truncation_L + 1 and truncation_L + 2.
struct TruncatedStat {
  std::int64_t value = 0;
  int truncation_L = 0;
  bool stabilized = false;
};

struct GrowthSequence {
  std::vector<std::int64_t> terms;
  std::vector<bool> stabilized;
  int truncation_L = 0;
  std::pair<int, int> window{0, 0};
  std::optional<double> estimated_gamma;
};

// Ext dimensions between objects indexed by W+ elements. All of them throw
// DomainError when an argument is not in W+ and require the relevant KL rows.

/// dim Ext^n(L(x), nabla(z)) = dim Ext^n(Delta(z), L(x)) = c^{[l(x)-l(z)-n]}_{z,x}.
std::int64_t ext_L_nabla(const KLTable& kl, int x, int z, int n);
/// dim Ext^n(L(x), L(y)) as the sum over z in W+ and a + b = n of products of the above.
std::int64_t ext_L_L(const KLTable& kl, int x, int y, int n);

/// Closed form for affine A1: |X-Y| <= n <= X+Y-2 and X+Y = n mod 2.
bool a1_region(int X, int Y, int n);

/// Sum over y in W+ with l(y) <= L of ext_L_L(x, y, n).
TruncatedStat sum_over_nu(const KLTable& kl, int x, int n, int L);

/// Max over W+ pairs with lengths <= L of c^{[l(x)-l(y)-n]}_{y,x}.
TruncatedStat c_n_max(const KLTable& kl, int n, int L);

/// First: n -> max over x, y in W+ with lengths <= L-n of ext_L_L(x,y,n).
/// Second: n -> max over x with l(x) <= L-n of the sum over y with l(y) <= L.
std::pair<GrowthSequence, GrowthSequence> cx_sequences(const KLTable& kl, int N, int L);

/// Heuristic growth rate: least-squares slope of log s_n against log n over
/// the window [lo, hi], plus one. Only positive terms with n >= 1 are used;
/// empty when fewer than four remain.
std::optional<double> estimate_gamma(std::span<const std::int64_t> terms, int lo, int hi);
/// Window defaults to the upper half of the sequence.
std::optional<double> estimate_gamma(std::span<const std::int64_t> terms);

/// Sum of mu-products over chains lambda = l_0 > ... > l_s < ... < l_n = nu of
/// W+ weights, ordered by nu - lambda in N Pi. Weights are w . (-2 rho) at
/// modulus l (0 selects the default modulus).
TruncatedStat zigzag_bound(const KLTable& kl, int x, int n, int L, int l = 0);

struct MuRowSums {
  std::vector<std::pair<int, TruncatedStat>> rows;
  std::optional<TruncatedStat> R;        // max row sum
  std::optional<TruncatedStat> R_prime;  // row of the minimal W+ element w_0
};

MuRowSums mu_row_sums(const KLTable& kl, int L);

/// Dominant weight attached to a W+ element: w . (-2 rho) at modulus l.
Weight wplus_weight(const RootSystem& rs, const AffineElement& w, int l);
/// nu - lambda is a nonzero element of N Pi.
bool weight_less(const RootSystem& rs, const Weight& lambda, const Weight& nu);

}  // namespace klcx
