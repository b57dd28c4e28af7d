#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "klcx/rootsys.hpp"

namespace klcx {

/// Element of W_a as an integer affine map u -> linear * u + translation on
/// simple-root coordinates. Identity is (linear, translation); the weight-basis
/// matrix is carried along for the dot action and the length is set when the
/// element is placed in a GroupTable.
struct AffineElement {
  IntMatrix linear;
  IntVector translation;
  IntMatrix weight_linear;
  int length = 0;

  bool operator==(const AffineElement& other) const {
    return linear == other.linear && translation == other.translation;
  }

  IntVector apply(const IntVector& u) const { return linear * u + translation; }
};

AffineElement identity_element(const RootSystem& rs);
/// Generator 0 is s_{alpha_0,-1}; generators 1..r are the simple reflections.
AffineElement generator_element(const RootSystem& rs, int generator);
/// (a * b)(u) = a(b(u)).
AffineElement compose(const AffineElement& a, const AffineElement& b);

/// w . lambda = w(lambda + rho) - rho with translations scaled by l.
Weight dot_action(const RootSystem& rs, const AffineElement& w, const Weight& lambda, int l);

using Word = std::vector<int>;

std::string word_to_string(const Word& word);
/// Whitespace-separated generator names "s0".."sr"; "e" or "" is the identity.
Word parse_word(std::string_view text);

struct GroupLimits {
  std::size_t max_elements = 5'000'000;
};

/// All elements of W (finite) or W_a (affine) of length at most L, indexed by
/// (length, lexicographically least reduced word).
class GroupTable {
 public:
  static constexpr int kOutside = -1;

  const RootSystem& root_system() const { return rs_; }
  bool affine() const { return affine_; }
  int max_length() const { return max_length_; }
  std::size_t size() const { return elements_.size(); }

  const std::vector<int>& generators() const { return generators_; }
  int rank() const { return rs_.rank(); }

  const AffineElement& element(int i) const { return elements_[i]; }
  int length(int i) const { return elements_[i].length; }
  const Word& word(int i) const { return words_[i]; }
  std::string word_string(int i) const { return word_to_string(words_[i]); }

  /// Index of x*s (right) or s*x (left), kOutside when beyond the length bound.
  int right(int x, int generator) const { return right_[x * stride_ + generator]; }
  int left(int x, int generator) const { return left_[x * stride_ + generator]; }
  bool is_left_descent(int x, int generator) const;
  bool is_right_descent(int x, int generator) const;

  /// First index of the given length and one past the last.
  int level_begin(int len) const { return level_offsets_[len]; }
  int level_end(int len) const { return level_offsets_[len + 1]; }

  /// Throws TruncationError when the element is longer than max_length().
  int index_of(const AffineElement& e) const;
  int index_of(const Word& word) const;
  int index_of(std::string_view word_text) const { return index_of(parse_word(word_text)); }

  Word reduced_word_by_descents(int x) const;

  friend GroupTable generate(const RootSystem& rs, int max_length, bool affine, const GroupLimits& limits);

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& k) const;
  };
  static std::vector<std::int64_t> key(const AffineElement& e);
  int find(const AffineElement& e) const;

  explicit GroupTable(const RootSystem& rs) : rs_(rs) {}

  RootSystem rs_;
  bool affine_ = true;
  int max_length_ = 0;
  int stride_ = 0;
  std::vector<int> generators_;
  std::vector<AffineElement> elements_;
  std::vector<Word> words_;
  std::vector<int> right_;
  std::vector<int> left_;
  std::vector<int> level_offsets_;
  std::unordered_map<std::vector<std::int64_t>, int, KeyHash> index_;
};

GroupTable generate(const RootSystem& rs, int max_length, bool affine = true, const GroupLimits& limits = {});

/// Bruhat order on a table, filled bottom-up by the lifting property.
class BruhatOrder {
 public:
  explicit BruhatOrder(const GroupTable& table);
  bool leq(int x, int y) const { return rows_[y][x] != 0; }

 private:
  std::vector<std::vector<unsigned char>> rows_;
};

/// Single query through the lifting property with a local memo.
bool bruhat_leq(const GroupTable& table, int x, int y);

/// x is longest in its coset W x: every finite generator is a left descent.
bool is_wplus(const GroupTable& table, int x);
/// W+ elements of the table in index order (so sorted by length).
std::vector<int> enumerate_wplus(const GroupTable& table);

}  // namespace klcx
