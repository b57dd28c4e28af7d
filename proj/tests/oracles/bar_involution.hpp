#pragma once

// Slow reference KL polynomials from the canonical basis of the Hecke algebra.
//
// R-polynomials come from the right-descent recursion
//   R_{y,w} = R_{ys,ws}                      if ys < y
//   R_{y,w} = (q-1) R_{y,ws} + q R_{ys,ws}   otherwise,
// and bar-invariance of C'_w gives
//   q^{d} Pbar_{y,w} - P_{y,w} = sum_{y<z<=w} R_{y,z} P_{z,w},  d = l(w) - l(y),
// whose right side has q-degree < d/2 exactly in the -P_{y,w} part.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "klcx/weylaff.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;  // dense, ascending powers of q

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline void add_to(Poly& acc, const Poly& p, std::int64_t factor = 1) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += factor * p[i];
  trim(acc);
}

class BarInvolution {
 public:
  explicit BarInvolution(const klcx::GroupTable& g) : g_(g) {}

  const Poly& R(int y, int w) {
    auto key = std::make_pair(y, w);
    if (auto it = r_.find(key); it != r_.end()) return it->second;
    Poly out;
    if (y == w) {
      out = {1};
    } else if (g_.length(y) < g_.length(w)) {
      int s = -1;
      for (int gen : g_.generators())
        if (g_.is_right_descent(w, gen)) {
          s = gen;
          break;
        }
      const int ws = g_.right(w, s);
      const int ys = g_.right(y, s);
      if (g_.is_right_descent(y, s)) {
        out = R(ys, ws);
      } else {
        out = mul({-1, 1}, R(y, ws));
        add_to(out, mul({0, 1}, R(ys, ws)));
      }
    }
    return r_.emplace(key, std::move(out)).first->second;
  }

  const Poly& P(int y, int w) {
    auto key = std::make_pair(y, w);
    if (auto it = p_.find(key); it != p_.end()) return it->second;
    Poly out;
    if (y == w) {
      out = {1};
    } else if (g_.length(y) < g_.length(w)) {
      const int d = g_.length(w) - g_.length(y);
      Poly rhs;
      for (int z = 0; z < static_cast<int>(g_.size()); ++z) {
        if (z == y || g_.length(z) <= g_.length(y) || g_.length(z) > g_.length(w)) continue;
        const Poly& rz = R(y, z);
        if (rz.empty()) continue;
        const Poly& pz = P(z, w);
        if (pz.empty()) continue;
        add_to(rhs, mul(rz, pz));
      }
      for (std::size_t k = 0; k < rhs.size(); ++k)
        if (2 * static_cast<int>(k) < d) {
          if (out.size() <= k) out.resize(k + 1, 0);
          out[k] = -rhs[k];
        }
      trim(out);
      // P_{y,w} vanishes unless y <= w, which the R-polynomials detect.
      if (R(y, w).empty()) out.clear();
    }
    return p_.emplace(key, std::move(out)).first->second;
  }

 private:
  const klcx::GroupTable& g_;
  std::map<std::pair<int, int>, Poly> r_;
  std::map<std::pair<int, int>, Poly> p_;
};

}  // namespace oracle
