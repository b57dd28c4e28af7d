#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "klcx/extcalc.hpp"
#include "klcx/rootsys.hpp"

namespace klcx {

struct PartitionCountQuery {
  int m = 0;
  IntVector sigma;  // simple-root coordinates
};

struct SymmetricLimits {
  std::size_t max_states = 50'000'000;
};

/// Number of multisets of exactly m positive roots summing to sigma, i.e.
/// dim S^m(u*)_sigma.
std::int64_t weight_multiplicity(const RootSystem& rs, int m, const IntVector& sigma,
                                 const SymmetricLimits& limits = {});
inline std::int64_t weight_multiplicity(const RootSystem& rs, const PartitionCountQuery& q) {
  return weight_multiplicity(rs, q.m, q.sigma);
}

/// Every weight of S^k(u*) for k <= m, from one counting sweep over the box
/// 0 <= sigma_i <= m * (highest root)_i.
class MultiplicityTable {
 public:
  MultiplicityTable(const RootSystem& rs, int m, const SymmetricLimits& limits = {});

  int max_parts() const { return m_; }
  std::int64_t count(int k, const IntVector& sigma) const;
  /// Nonzero weights of S^k(u*) in lexicographic order of sigma.
  std::vector<std::pair<IntVector, std::int64_t>> weights(int k) const;
  /// Lexicographically least maximising sigma and its multiplicity.
  std::pair<IntVector, std::int64_t> max_weight(int k) const;
  std::int64_t total(int k) const;

 private:
  IntVector unflatten(std::size_t idx) const;

  int m_;
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t volume_ = 1;
  std::vector<std::vector<std::int64_t>> dp_;
};

std::pair<IntVector, std::int64_t> max_multiplicity(const RootSystem& rs, int m, const SymmetricLimits& limits = {});

/// Triples (alpha, beta, gamma) of distinct simple roots with gamma after
/// alpha in the chosen order and beta joined to both in the Dynkin diagram.
struct TripleSet {
  std::vector<int> ordering;                 // simple-root indices, first to last
  std::vector<std::array<int, 3>> triples;   // indices into the simple roots
  IntVector tau_phi;                         // sum of alpha + 2 beta + gamma
};

/// Throws DomainError for rank < 3. An empty ordering means diagram order.
TripleSet build_triples(const RootSystem& rs, std::vector<int> ordering = {});

struct TripleWitness {
  int n = 0;
  int m = 0;
  IntVector target;
  std::int64_t count = 0;
  std::int64_t bound = 0;
  std::int64_t distinct_partitions = 0;
  bool distinct_ok = false;
  bool bound_ok = false;
};

/// m = 3 n |T| roots summing to n tau^Phi; counts them and regenerates the
/// (n+1)^|T| lists n_tau p_L + (n - n_tau) p_R to check they are distinct.
TripleWitness triple_witness(const RootSystem& rs, int n, const SymmetricLimits& limits = {});

/// Max weight-space dimension of S^n(u*) for n <= N with its growth estimate.
GrowthSequence s_phi_estimate(const RootSystem& rs, int N, const SymmetricLimits& limits = {});

}  // namespace klcx
