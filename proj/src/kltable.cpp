#include "klcx/kltable.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace klcx {

namespace {

const QPolynomial kZero;
const QPolynomial kOne = QPolynomial::constant(1);

constexpr const char* kCacheMagic = "klcx-kl-cache 1";

std::string group_header(const GroupTable& g, int max_length) {
  return "group " + g.root_system().label() + (g.affine() ? " affine" : " finite") + " L=" +
         std::to_string(max_length);
}

}  // namespace

KLTable::KLTable(const GroupTable& group, DescentRule rule)
    : group_(&group), rule_(rule), rows_(group.size()), mu_below_(group.size()), ready_(group.size(), 0) {
  if (!rows_.empty()) ready_[0] = 1;  // identity: nothing is shorter
}

bool KLTable::complete() const {
  for (char r : ready_)
    if (!r) return false;
  return true;
}

int KLTable::descent_for(int x) const {
  const auto& gens = group_->generators();
  if (rule_ == DescentRule::Smallest) {
    for (int g : gens)
      if (group_->is_left_descent(x, g)) return g;
  } else {
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
      if (group_->is_left_descent(x, *it)) return *it;
  }
  throw std::logic_error("element without a left descent");
}

const QPolynomial& KLTable::get(int y, int x) const {
  if (y == x) return kOne;
  if (group_->length(y) >= group_->length(x)) return kZero;
  return rows_[x][y];
}

void KLTable::ensure_row(int x) {
  if (ready_[x]) return;
  const int s = descent_for(x);
  const int v = group_->left(x, s);
  ensure_row(v);
  for (const auto& [z, m] : mu_below_[v])
    if (group_->is_left_descent(z, s)) ensure_row(z);
  compute_row(x);
  finish_row(x);
}

void KLTable::compute_row(int x) {
  const GroupTable& g = *group_;
  const int s = descent_for(x);
  const int v = g.left(x, s);
  const int lx = g.length(x);
  const int n = g.level_begin(lx);

  MuList active;
  for (const auto& [z, m] : mu_below_[v])
    if (g.is_left_descent(z, s)) active.emplace_back(z, m);

  std::vector<QPolynomial> row(n);
  for (int y = 0; y < n; ++y) {
    const int sy = g.left(y, s);
    const int c = g.length(sy) < g.length(y) ? 1 : 0;
    QPolynomial p;
    p.add_scaled(get(sy, v), 1, 1 - c);
    p.add_scaled(get(y, v), 1, c);
    for (const auto& [z, m] : active) {
      if (g.length(y) >= g.length(z) && y != z) continue;
      p.add_scaled(get(y, z), -m, (lx - g.length(z)) / 2);
    }
    for (const auto& t : p.terms())
      if (t.coeff < 0)
        throw std::logic_error("negative Kazhdan-Lusztig coefficient at (" + g.word_string(y) + ", " +
                               g.word_string(x) + ")");
    row[y] = std::move(p);
  }
  rows_[x] = std::move(row);
}

void KLTable::finish_row(int x) {
  const GroupTable& g = *group_;
  const int lx = g.length(x);
  MuList mus;
  for (int y = 0; y < static_cast<int>(rows_[x].size()); ++y) {
    const int d = lx - g.length(y);
    if (d % 2 == 0) continue;
    const std::int64_t m = rows_[x][y].coefficient((d - 1) / 2);
    if (m != 0) mus.emplace_back(y, m);
  }
  mu_below_[x] = std::move(mus);
  ready_[x] = 1;
}

void KLTable::build_all(int threads) {
  const GroupTable& g = *group_;
  if (threads < 1) threads = 1;
  for (int len = 1; len <= g.max_length(); ++len) {
    std::vector<int> todo;
    for (int x = g.level_begin(len); x < g.level_end(len); ++x)
      if (!ready_[x]) todo.push_back(x);
    if (todo.empty()) continue;
    const int workers = std::min<int>(threads, static_cast<int>(todo.size()));
    if (workers == 1) {
      for (int x : todo) compute_row(x);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(workers);
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < todo.size(); i += workers) compute_row(todo[i]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (int x : todo) finish_row(x);
  }
}

const QPolynomial& KLTable::compute(int y, int x) {
  ensure_row(x);
  return get(y, x);
}

const QPolynomial& KLTable::polynomial(int y, int x) const {
  if (!ready_[x]) throw std::logic_error("KL row not built: " + group_->word_string(x));
  return get(y, x);
}

std::int64_t KLTable::mu(int a, int b) const {
  const GroupTable& g = *group_;
  if (g.length(a) == g.length(b)) return 0;
  const int lo = g.length(a) < g.length(b) ? a : b;
  const int hi = lo == a ? b : a;
  return t_coefficient(polynomial(lo, hi), g.length(hi) - g.length(lo) - 1);
}

void KLTable::write_cache(std::ostream& out) const {
  if (!complete()) throw std::logic_error("write_cache needs a complete table");
  const GroupTable& g = *group_;
  out << kCacheMagic << '\n' << group_header(g, g.max_length()) << '\n';
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    const std::string xw = g.word_string(x);
    for (int y = 0; y < static_cast<int>(rows_[x].size()); ++y) {
      if (rows_[x][y].is_zero()) continue;
      out << g.word_string(y) << " | " << xw << " | " << rows_[x][y].to_string() << '\n';
    }
    out << xw << " | " << xw << " | 1\n";
  }
}

int KLTable::load_cache(std::istream& in) {
  const GroupTable& g = *group_;
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) throw std::invalid_argument("not a KL cache file");
  if (!std::getline(in, line)) throw std::invalid_argument("truncated KL cache header");
  const std::string prefix = group_header(g, 0);
  const std::string stem = prefix.substr(0, prefix.size() - 1);
  if (line.rfind(stem, 0) != 0) throw std::invalid_argument("KL cache is for a different group: " + line);
  int cache_length = 0;
  try {
    cache_length = std::stoi(line.substr(stem.size()));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad KL cache header: " + line);
  }
  const int limit = std::min(cache_length, g.max_length());

  std::vector<std::vector<QPolynomial>> rows(g.size());
  for (int x = 0; x < g.level_end(limit); ++x) rows[x].resize(g.level_begin(g.length(x)));
  while (std::getline(in, line)) {
    const auto a = line.find(" | ");
    const auto b = line.find(" | ", a == std::string::npos ? a : a + 3);
    if (a == std::string::npos || b == std::string::npos) throw std::invalid_argument("bad KL cache line: " + line);
    const Word yw = parse_word(line.substr(0, a));
    const Word xw = parse_word(line.substr(a + 3, b - a - 3));
    if (static_cast<int>(xw.size()) > limit) continue;
    const int x = g.index_of(xw);
    const int y = g.index_of(yw);
    QPolynomial p = QPolynomial::parse(line.substr(b + 3));
    if (y == x) {
      if (p != kOne) throw std::invalid_argument("KL cache has P_{x,x} != 1");
      continue;
    }
    if (g.length(y) >= g.length(x)) throw std::invalid_argument("KL cache pair out of order: " + line);
    for (const auto& t : p.terms())
      if (t.coeff < 0) throw std::invalid_argument("KL cache has a negative coefficient: " + line);
    rows[x][y] = std::move(p);
  }
  int seeded = 0;
  for (int x = 0; x < g.level_end(limit); ++x) {
    if (x > 0) rows_[x] = std::move(rows[x]);
    finish_row(x);
    ++seeded;
  }
  return seeded;
}

}  // namespace klcx
