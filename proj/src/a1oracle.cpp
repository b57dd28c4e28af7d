#include "klcx/a1oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "klcx/extcalc.hpp"

namespace klcx::a1 {

ExtAnswer ext_dim(const Query& q) {
  if (q.X < 1 || q.Y < 1) throw std::domain_error("A1 query needs X, Y >= 1");
  if (q.n < 0) return {};
  const int a2 = q.n + q.X - q.Y;
  const int b2 = q.n - q.X + q.Y;
  const int z2 = q.X + q.Y - q.n;
  if (a2 < 0 || b2 < 0 || a2 % 2 != 0 || z2 % 2 != 0) return {};
  const int z = z2 / 2;
  if (z < 1 || z > std::min(q.X, q.Y)) return {};
  return {1, Witness{a2 / 2, b2 / 2, z}};
}

int sum_row(int X, int n) {
  int total = 0;
  // Nonzero terms need |X - Y| <= n.
  for (int Y = std::max(1, X - n); Y <= X + n; ++Y) total += ext_dim({X, Y, n}).dim;
  return total;
}

VerifyReport verify_against_engine(int xmax, int nmax, int threads) {
  const RootSystem rs = build_root_system(RootType::A, 1);
  const GroupTable table = generate(rs, xmax, true);
  KLTable kl(table);
  kl.build_all(threads);
  const auto wplus = enumerate_wplus(table);
  std::vector<int> by_length(xmax + 1, -1);
  for (int w : wplus) {
    if (by_length[table.length(w)] != -1) throw std::logic_error("two W+ elements of one length in affine A1");
    by_length[table.length(w)] = w;
  }
  VerifyReport report;
  for (int X = 1; X <= xmax; ++X)
    for (int Y = 1; Y <= xmax; ++Y)
      for (int n = 0; n <= nmax; ++n) {
        const long long engine = ext_L_L(kl, by_length[X], by_length[Y], n);
        const long long oracle = ext_dim({X, Y, n}).dim;
        ++report.checked;
        if (engine != oracle) report.disagreements.push_back({X, Y, n, engine, oracle});
      }
  return report;
}

}  // namespace klcx::a1
