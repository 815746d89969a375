#pragma once

#include <cstddef>
#include <vector>

#include "eqk/abgroup.hpp"
#include "eqk/matrix.hpp"

namespace eqk {

/// Cochain complex 0 -> C^0 -> ... -> C^n -> 0 with
/// C^p = Z^{free_rank(p)} (+) (Z/2)^{tor2_rank(p)}. The differential on C^p is
///
///   [ F_p   0  ]
///   [ X_p  T_p ]
///
/// with F_p integral, T_p and X_p over Z/2. Maps act on column vectors, so
/// F_p has free_rank(p+1) rows and free_rank(p) columns. There is no
/// torsion-to-free block.
class SplitCochainComplex {
 public:
  SplitCochainComplex() : SplitCochainComplex(std::vector<std::size_t>{0}, std::vector<std::size_t>{0}, {}, {}, {}) {}
  /// Validates shapes and d o d = 0; throws NotACochainComplex otherwise.
  /// Empty T or X vectors stand for zero blocks of the right shape.
  SplitCochainComplex(std::vector<std::size_t> free_ranks, std::vector<std::size_t> tor2_ranks,
                      std::vector<IntMatrix> free_maps, std::vector<Mod2Matrix> torsion_maps,
                      std::vector<Mod2Matrix> cross_maps);

  static SplitCochainComplex integral(std::vector<IntMatrix> free_maps);
  static SplitCochainComplex integral(std::vector<std::size_t> free_ranks, std::vector<IntMatrix> free_maps);
  /// Zero differentials on the given groups.
  static SplitCochainComplex zero(std::vector<std::size_t> free_ranks, std::vector<std::size_t> tor2_ranks);

  /// Top degree.
  std::size_t length() const { return free_ranks_.size() - 1; }
  std::size_t free_rank(std::size_t p) const { return free_ranks_.at(p); }
  std::size_t tor2_rank(std::size_t p) const { return tor2_ranks_.at(p); }
  /// Blocks of the map C^p -> C^{p+1}, p < length().
  const IntMatrix& free_map(std::size_t p) const { return free_maps_.at(p); }
  const Mod2Matrix& torsion_map(std::size_t p) const { return torsion_maps_.at(p); }
  const Mod2Matrix& cross_map(std::size_t p) const { return cross_maps_.at(p); }

  bool is_integral() const;

 private:
  std::vector<std::size_t> free_ranks_;
  std::vector<std::size_t> tor2_ranks_;
  std::vector<IntMatrix> free_maps_;
  std::vector<Mod2Matrix> torsion_maps_;
  std::vector<Mod2Matrix> cross_maps_;
};

AbGroup cohomology(const SplitCochainComplex& c, std::size_t p);
std::vector<AbGroup> cohomology_all(const SplitCochainComplex& c);

/// C (x) Z/2 for an integral complex: the free blocks move to the torsion side.
SplitCochainComplex tensor_mod2(const SplitCochainComplex& c);

/// One degree of the universal coefficient comparison
///   dim H^n(C (x) Z/2) = dim(H^n(C) (x) Z/2) + dim Tor(H^{n+1}(C), Z/2).
struct UctDegree {
  std::size_t mod2_dim = 0;
  std::size_t tensor_dim = 0;
  std::size_t tor_dim = 0;
  bool holds() const { return mod2_dim == tensor_dim + tor_dim; }
};

std::vector<UctDegree> uct_report(const SplitCochainComplex& c);
bool uct_verify(const SplitCochainComplex& c);

namespace detail {
/// Cohomology by explicit lattices (kernel of the lifted differential modulo
/// the lifted image plus 2 on the torsion coordinates). Valid for any shape;
/// used for complexes with cross blocks and as a test cross-check.
AbGroup cohomology_lattice(const SplitCochainComplex& c, std::size_t p);
}  // namespace detail

}  // namespace eqk
