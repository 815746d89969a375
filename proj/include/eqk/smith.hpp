#pragma once

#include <cstddef>
#include <vector>

#include "eqk/matrix.hpp"

namespace eqk {

/// left * M * right == diagonal, with left and right unimodular and the
/// diagonal entries nonnegative, each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

/// Classical reduction pivoting on a nonzero entry of least absolute value,
/// ties broken by (row, col). Intended for small and medium dense inputs.
SmithForm smith_normal_form(const IntMatrix& m);

/// Rank and the invariant factors (all nonzero diagonal entries of the Smith
/// form, in divisor-chain order, ones included) without transforms.
struct RankProfile {
  std::size_t rank = 0;
  std::vector<Integer> factors;
};

/// Sparse elimination: unit pivots first, then a dense Smith pass on whatever
/// block survives. Scales to the large, very sparse coboundaries of order
/// complexes.
RankProfile elimination_profile(const IntMatrix& m);

std::size_t rank_mod2(const Mod2Matrix& m);

}  // namespace eqk
