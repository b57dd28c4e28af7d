#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klcx/errors.hpp"
#include "klcx/types.hpp"

namespace klcx {

enum class RootType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A weight in fundamental-weight coordinates: coords(i) = (lambda, alpha_i^vee).
struct Weight {
  IntVector coords;

  bool operator==(const Weight& other) const {
    return coords.size() == other.coords.size() && coords == other.coords;
  }
};

/// Irreducible crystallographic root system with Bourbaki numbering.
///
/// The invariant form is normalised so that short roots have squared length 2;
/// with that choice every inner product of root-lattice vectors is an integer,
/// so the whole structure is held in integer matrices. Roots are vectors in
/// simple-root coordinates, weights in fundamental-weight coordinates.
class RootSystem {
 public:
  RootSystem(RootType type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  /// Gram matrix (alpha_i, alpha_j).
  const IntMatrix& gram() const { return gram_; }
  /// Cartan matrix A(i,j) = (alpha_i, alpha_j^vee).
  const IntMatrix& cartan() const { return cartan_; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  const IntVector& highest_root() const { return positive_.back(); }
  /// Maximal short root alpha_0 (the highest root in simply-laced types).
  const IntVector& alpha0() const { return alpha0_; }
  IntVector simple_root(int i) const;

  /// rho in fundamental-weight coordinates (all ones).
  Weight rho() const { return Weight{IntVector::Ones(rank_)}; }
  /// h = (rho, alpha_0^vee) + 1.
  int coxeter_number() const { return coxeter_number_; }

  std::int64_t inner(const IntVector& u, const IntVector& v) const { return u.dot(gram_ * v); }
  std::int64_t squared_length(const IntVector& root) const { return inner(root, root); }

  /// (u, gamma^vee) for u in the root lattice; exact, throws if non-integral.
  std::int64_t coroot_pairing(const IntVector& u, const IntVector& gamma) const;
  /// (lambda, gamma^vee) for a weight lambda.
  std::int64_t coroot_pairing(const Weight& lambda, const IntVector& gamma) const;

  /// Root-lattice vector to fundamental-weight coordinates.
  Weight to_weight(const IntVector& root_coords) const;
  /// Inverse conversion; empty when lambda is not in the root lattice.
  std::optional<IntVector> to_root_coords(const Weight& lambda) const;

  /// s_i(v) for a vector in simple-root coordinates.
  IntVector reflect(const IntVector& v, int i) const;

  bool is_root(const IntVector& v) const;

 private:
  RootType type_;
  int rank_;
  IntMatrix gram_;
  IntMatrix cartan_;
  std::vector<IntVector> positive_;
  IntVector alpha0_;
  int coxeter_number_ = 0;
  // (A^T)^{-1} = inverse_numerator_ / inverse_denominator_.
  IntMatrix inverse_numerator_;
  std::int64_t inverse_denominator_ = 1;
};

/// Throws DomainError for combinations outside the classification (E9, D3, G3, ...).
RootSystem build_root_system(RootType type, int rank);
/// Parses labels such as "A1", "B2", "E8".
RootSystem build_root_system(std::string_view label);
std::pair<RootType, int> parse_type_label(std::string_view label);

std::int64_t height(const IntVector& root);
bool is_dominant(const Weight& lambda);

/// All roots alpha (both signs) with (rho, alpha^vee) = 0 mod l; positives first.
std::vector<IntVector> compute_phi0(const RootSystem& rs, int l);

/// Conditions (i)-(iv) on l, taken literally (G2 with 3 | l is exceptional for every l).
bool is_exceptional(const RootSystem& rs, int l);

/// Smallest integer l > h that is not exceptional.
int default_weight_modulus(const RootSystem& rs);

}  // namespace klcx
