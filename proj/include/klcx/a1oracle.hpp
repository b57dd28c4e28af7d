#pragma once

#include <optional>
#include <string>
#include <vector>

namespace klcx::a1 {

// Closed-form answers for affine type A1, where W+ has exactly one element of
// each length X >= 1 and every KL polynomial is 1 on comparable pairs.

struct Query {
  int X = 1;  // l(x), >= 1
  int Y = 1;  // l(y), >= 1
  int n = 0;
};

/// The unique contributing data (a, b, l(z)) with a + b = n.
struct Witness {
  int a = 0;
  int b = 0;
  int z_length = 0;
};

struct ExtAnswer {
  int dim = 0;
  std::optional<Witness> witness;
};

/// dim Ext^n(L(x), L(y)) from a = (n+X-Y)/2, b = (n-X+Y)/2, l(z) = (X+Y-n)/2,
/// which must be nonnegative integers with 1 <= l(z) <= min(X, Y).
ExtAnswer ext_dim(const Query& q);

/// #{Y >= 1 : ext_dim(X, Y, n) = 1}.
int sum_row(int X, int n);

struct Disagreement {
  int X, Y, n;
  long long engine, oracle;
};

struct VerifyReport {
  long long checked = 0;
  std::vector<Disagreement> disagreements;
};

/// Compares the general engine on affine A1 with the closed form for
/// 1 <= X, Y <= xmax and 0 <= n <= nmax.
VerifyReport verify_against_engine(int xmax, int nmax, int threads = 1);

}  // namespace klcx::a1
