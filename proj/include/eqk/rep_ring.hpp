#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqk/group_class.hpp"
#include "eqk/matrix.hpp"

namespace eqk {

// Complex irreducible representations are indexed as follows.
//   Cyclic(m):      characters j = 0..m-1, j = 0 trivial.
//   Elem2(k):       subsets S of {0..k-1} as bitmasks 0..2^k-1 (sign on S).
//   DihedralOdd(m): trivial, sign, then the 2-dimensional rho_1..rho_{(m-1)/2}.

std::size_t k0_rank(const GroupClass& g);
std::vector<long> irrep_dimensions(const GroupClass& g);
/// Index of the complex conjugate of each irreducible.
std::vector<std::size_t> irrep_conjugates(const GroupClass& g);
std::vector<std::string> irrep_labels(const GroupClass& g);

/// Matrix of R(big) -> R(sub): column c is the restriction of big irrep c
/// written in the irreps of sub.
IntMatrix restriction_k0(const InclusionDescriptor& incl);

struct RealTypeCounts {
  std::size_t n_r = 0;
  std::size_t n_c = 0;
  std::size_t n_h = 0;
  friend bool operator==(const RealTypeCounts&, const RealTypeCounts&) = default;
};

/// Real irreducibles, in basis order: real type first (one per self-conjugate
/// complex irrep), then complex type (one per conjugate pair, named by its
/// lower index).
struct RealBasis {
  std::vector<std::size_t> real_type;
  std::vector<std::size_t> complex_type;
};

RealBasis real_basis(const GroupClass& g);
RealTypeCounts real_type_counts(const GroupClass& g);

/// KO^{-n}_G(pt) for n in 0..7, as free rank plus a count of Z/2 summands.
struct KOCoefficient {
  std::size_t free_rank = 0;
  std::size_t tor2_rank = 0;
  std::vector<std::string> free_labels;
  std::vector<std::string> tor2_labels;
};

KOCoefficient ko_point(const GroupClass& g, unsigned n);

/// Blocks of the restriction KO^{-n}_big(pt) -> KO^{-n}_sub(pt) on the
/// ko_point bases: free -> free over Z, torsion -> torsion and free -> torsion
/// over Z/2.
struct KORestriction {
  IntMatrix free;
  Mod2Matrix torsion;
  Mod2Matrix cross;
};

KORestriction restriction_ko(const InclusionDescriptor& incl, unsigned n);

}  // namespace eqk
