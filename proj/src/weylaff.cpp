#include "klcx/weylaff.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace klcx {

AffineElement identity_element(const RootSystem& rs) {
  const int r = rs.rank();
  return AffineElement{IntMatrix::Identity(r, r), IntVector::Zero(r), IntMatrix::Identity(r, r), 0};
}

AffineElement generator_element(const RootSystem& rs, int generator) {
  const int r = rs.rank();
  if (generator < 0 || generator > r) throw DomainError("generator index out of range: s" + std::to_string(generator));
  AffineElement e = identity_element(rs);
  e.length = 1;
  if (generator > 0) {
    const int i = generator - 1;
    // s_i(v) = v - (v, alpha_i^vee) alpha_i.
    e.linear.row(i) -= rs.cartan().col(i).transpose();
    e.weight_linear.col(i) -= rs.cartan().row(i).transpose();
    return e;
  }
  const IntVector& a0 = rs.alpha0();
  const std::int64_t len2 = rs.squared_length(a0);
  const IntVector functional = (2 * rs.gram() * a0) / len2;
  e.linear -= a0 * functional.transpose();
  IntVector weight_functional(r);
  for (int j = 0; j < r; ++j) weight_functional(j) = a0(j) * rs.gram()(j, j) / len2;
  const IntVector a0_weight = rs.to_weight(a0).coords;
  e.weight_linear -= a0_weight * weight_functional.transpose();
  e.translation = -a0;
  return e;
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  return AffineElement{a.linear * b.linear, a.linear * b.translation + a.translation,
                       a.weight_linear * b.weight_linear, 0};
}

Weight dot_action(const RootSystem& rs, const AffineElement& w, const Weight& lambda, int l) {
  if (l < 1) throw DomainError("dot_action needs l >= 1");
  const IntVector shifted = lambda.coords + rs.rho().coords;
  const IntVector translation = rs.to_weight(w.translation).coords * l;
  return Weight{w.weight_linear * shifted + translation - rs.rho().coords};
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += 's';
    out += std::to_string(word[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's') throw DomainError("bad generator name: " + tok);
    int g = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), g);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || g < 0)
      throw DomainError("bad generator name: " + tok);
    out.push_back(g);
  }
  return out;
}

std::size_t GroupTable::KeyHash::operator()(const std::vector<std::int64_t>& k) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::int64_t> GroupTable::key(const AffineElement& e) {
  std::vector<std::int64_t> k(e.linear.data(), e.linear.data() + e.linear.size());
  k.insert(k.end(), e.translation.data(), e.translation.data() + e.translation.size());
  return k;
}

int GroupTable::find(const AffineElement& e) const {
  auto it = index_.find(key(e));
  return it == index_.end() ? kOutside : it->second;
}

bool GroupTable::is_left_descent(int x, int generator) const {
  const int sx = left(x, generator);
  return sx != kOutside && length(sx) < length(x);
}

bool GroupTable::is_right_descent(int x, int generator) const {
  const int xs = right(x, generator);
  return xs != kOutside && length(xs) < length(x);
}

int GroupTable::index_of(const AffineElement& e) const {
  const int i = find(e);
  if (i == kOutside)
    throw TruncationError("element not in table (length exceeds " + std::to_string(max_length_) + ")");
  return i;
}

int GroupTable::index_of(const Word& word) const {
  AffineElement e = identity_element(rs_);
  for (int g : word) {
    if (g > rs_.rank() || (g == 0 && !affine_))
      throw DomainError("generator s" + std::to_string(g) + " not in this group");
    e = compose(e, generator_element(rs_, g));
  }
  return index_of(e);
}

Word GroupTable::reduced_word_by_descents(int x) const {
  Word rev;
  while (length(x) > 0) {
    for (int g : generators_) {
      if (is_right_descent(x, g)) {
        rev.push_back(g);
        x = right(x, g);
        break;
      }
    }
  }
  return Word(rev.rbegin(), rev.rend());
}

GroupTable generate(const RootSystem& rs, int max_length, bool affine, const GroupLimits& limits) {
  if (max_length < 0) throw DomainError("length bound must be nonnegative");
  GroupTable t(rs);
  t.affine_ = affine;
  t.max_length_ = max_length;
  const int r = rs.rank();
  t.stride_ = r + 1;
  for (int g = affine ? 0 : 1; g <= r; ++g) t.generators_.push_back(g);

  std::vector<AffineElement> gens(r + 1);
  for (int g : t.generators_) gens[g] = generator_element(rs, g);

  // Breadth-first levels; each level is keyed by canonical form.
  using Key = std::vector<std::int64_t>;
  std::unordered_map<Key, int, GroupTable::KeyHash> level_of;
  std::vector<std::vector<AffineElement>> levels(1);
  levels[0].push_back(identity_element(rs));
  level_of.emplace(GroupTable::key(levels[0][0]), 0);
  std::size_t total = 1;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<AffineElement> next;
    for (const auto& x : levels[len - 1]) {
      for (int g : t.generators_) {
        AffineElement y = compose(x, gens[g]);
        Key k = GroupTable::key(y);
        if (level_of.count(k)) continue;
        y.length = len;
        level_of.emplace(std::move(k), len);
        next.push_back(std::move(y));
        if (++total > limits.max_elements)
          throw ResourceLimitError("group table exceeds " + std::to_string(limits.max_elements) + " elements");
      }
    }
    if (next.empty()) {
      for (int rest = len; rest <= max_length; ++rest) levels.emplace_back();
      break;
    }
    levels.push_back(std::move(next));
  }

  // Lexicographically least reduced words: first letter is the smallest left descent.
  std::map<Key, Word> word_of;
  word_of.emplace(GroupTable::key(levels[0][0]), Word{});
  for (std::size_t len = 1; len < levels.size(); ++len) {
    for (const auto& x : levels[len]) {
      for (int g : t.generators_) {
        Key k = GroupTable::key(compose(gens[g], x));
        auto it = level_of.find(k);
        if (it == level_of.end() || it->second != static_cast<int>(len) - 1) continue;
        Word w{g};
        const Word& tail = word_of.at(k);
        w.insert(w.end(), tail.begin(), tail.end());
        word_of.emplace(GroupTable::key(x), std::move(w));
        break;
      }
    }
  }

  t.level_offsets_.push_back(0);
  for (auto& level : levels) {
    std::vector<std::pair<Word, std::size_t>> order;
    order.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) order.emplace_back(word_of.at(GroupTable::key(level[i])), i);
    std::sort(order.begin(), order.end());
    for (auto& [w, i] : order) {
      t.index_.emplace(GroupTable::key(level[i]), static_cast<int>(t.elements_.size()));
      t.elements_.push_back(std::move(level[i]));
      t.words_.push_back(std::move(w));
    }
    t.level_offsets_.push_back(static_cast<int>(t.elements_.size()));
  }

  const std::size_t n = t.elements_.size();
  t.right_.assign(n * t.stride_, GroupTable::kOutside);
  t.left_.assign(n * t.stride_, GroupTable::kOutside);
  for (std::size_t x = 0; x < n; ++x) {
    for (int g : t.generators_) {
      t.right_[x * t.stride_ + g] = t.find(compose(t.elements_[x], gens[g]));
      t.left_[x * t.stride_ + g] = t.find(compose(gens[g], t.elements_[x]));
    }
  }
  return t;
}

BruhatOrder::BruhatOrder(const GroupTable& table) : rows_(table.size()) {
  const int n = static_cast<int>(table.size());
  for (int y = 0; y < n; ++y) {
    auto& row = rows_[y];
    row.assign(n, 0);
    row[y] = 1;
    if (table.length(y) == 0) continue;
    int s = -1;
    for (int g : table.generators())
      if (table.is_right_descent(y, g)) {
        s = g;
        break;
      }
    const int ys = table.right(y, s);
    const auto& below = rows_[ys];
    const int end = table.level_begin(table.length(y));
    for (int x = 0; x < end; ++x) {
      const int xs = table.right(x, s);
      const bool descends = xs != GroupTable::kOutside && table.length(xs) < table.length(x);
      // x <= y  iff  min(x, xs) <= ys.
      row[x] = descends ? below[xs] : below[x];
    }
  }
}

namespace {

bool bruhat_rec(const GroupTable& t, int x, int y, std::map<std::pair<int, int>, bool>& memo) {
  if (x == y) return true;
  if (t.length(x) >= t.length(y)) return false;
  if (t.length(x) == 0) return true;
  auto key = std::make_pair(x, y);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int s = -1;
  for (int g : t.generators())
    if (t.is_right_descent(y, g)) {
      s = g;
      break;
    }
  const int ys = t.right(y, s);
  const bool result = t.is_right_descent(x, s) ? bruhat_rec(t, t.right(x, s), ys, memo) : bruhat_rec(t, x, ys, memo);
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool bruhat_leq(const GroupTable& table, int x, int y) {
  std::map<std::pair<int, int>, bool> memo;
  return bruhat_rec(table, x, y, memo);
}

bool is_wplus(const GroupTable& table, int x) {
  for (int g = 1; g <= table.rank(); ++g)
    if (!table.is_left_descent(x, g)) return false;
  return true;
}

std::vector<int> enumerate_wplus(const GroupTable& table) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(table.size()); ++x)
    if (is_wplus(table, x)) out.push_back(x);
  return out;
}

}  // namespace klcx
