#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "klcx/qpoly.hpp"
#include "klcx/weylaff.hpp"

namespace klcx {

/// Which left descent s (sx < x) drives the recursion for P_{y,x}.
enum class DescentRule { Smallest, Largest };

/// Memoized Kazhdan-Lusztig polynomials P_{y,x} for every pair in a GroupTable.
///
/// Rows are indexed by x and hold P_{y,x} for all y shorter than x (indices
/// below level_begin(length(x))). A row depends only on rows of strictly
/// shorter elements, so rows can be filled lazily on demand or in bulk one
/// length stratum at a time. Every coefficient is checked to be nonnegative as
/// it is produced; a negative one throws std::logic_error.
///
/// The table keeps a pointer to the GroupTable, which must outlive it.
class KLTable {
 public:
  using MuList = std::vector<std::pair<int, std::int64_t>>;

  explicit KLTable(const GroupTable& group, DescentRule rule = DescentRule::Smallest);

  const GroupTable& group() const { return *group_; }
  int max_length() const { return group_->max_length(); }
  DescentRule rule() const { return rule_; }

  /// Fill every row, stratum by stratum; each stratum is split across threads.
  void build_all(int threads = 1);
  bool complete() const;
  bool row_ready(int x) const { return ready_[x] != 0; }

  /// Lazy single query: computes whatever rows P_{y,x} depends on.
  const QPolynomial& compute(int y, int x);
  /// Read-only access; throws std::logic_error if row x has not been built.
  const QPolynomial& polynomial(int y, int x) const;

  /// Symmetric mu: coefficient of t^{l(hi)-l(lo)-1} in P_{lo,hi}.
  std::int64_t mu(int a, int b) const;
  /// Pairs (z, mu(z,x)) with z < x and mu nonzero.
  const MuList& mu_below(int x) const { return mu_below_[x]; }

  /// Versioned text cache; one line "y_word | x_word | c0,c1,..." per nonzero P_{y,x}.
  void write_cache(std::ostream& out) const;
  /// Seeds every row with length(x) <= min(cache L, max_length()). Returns the
  /// number of rows seeded. Throws std::invalid_argument on a malformed or
  /// mismatched cache.
  int load_cache(std::istream& in);

 private:
  void ensure_row(int x);
  void compute_row(int x);
  int descent_for(int x) const;
  const QPolynomial& get(int y, int x) const;
  void finish_row(int x);

  const GroupTable* group_;
  DescentRule rule_;
  std::vector<std::vector<QPolynomial>> rows_;
  std::vector<MuList> mu_below_;
  std::vector<char> ready_;
};

}  // namespace klcx
