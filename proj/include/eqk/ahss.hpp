#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eqk/abgroup.hpp"
#include "eqk/bredon.hpp"
#include "eqk/orbit_complex.hpp"

namespace eqk {

/// E_2^{p,q} = H^p(X; h^q) over one period of q. Rows are stored by
/// n = -q mod period, so row n holds coefficients in h^{-n}.
class E2Page {
 public:
  E2Page(Theory theory, std::vector<std::vector<AbGroup>> columns);

  Theory theory() const { return theory_; }
  unsigned period() const { return eqk::period(theory_); }
  std::size_t columns() const { return entries_.size(); }
  /// Entry at column p, row n = -q mod period.
  const AbGroup& at(std::size_t p, unsigned n) const { return entries_.at(p).at(n % period()); }
  /// Entry at column p and any integer q.
  const AbGroup& at_q(std::size_t p, long q) const;

 private:
  Theory theory_;
  std::vector<std::vector<AbGroup>> entries_;  // [p][n]
};

E2Page build_e2(const OrbitComplex& x, Theory theory);

/// True when no d_r (r >= 2) can have nonzero source and target, judged only
/// by which entries vanish. False means undetermined, not that a
/// differential is known to be nonzero.
bool detect_collapse(const E2Page& page);

struct AbutmentPiece {
  std::size_t p = 0;
  unsigned n = 0;  // coefficient row of the piece
  AbGroup group;
};

/// Graded pieces of h^t for t = degree (0, -1, ..., 1 - period). The
/// filtration is decreasing: the piece with the largest p is a subgroup,
/// the one with the smallest p a quotient.
struct AbutmentReport {
  int degree = 0;
  std::vector<AbutmentPiece> pieces;  // nonzero pieces, increasing p
  std::optional<AbGroup> resolved;
  bool extension_ambiguous = false;
};

/// Throws NotKnownToCollapse unless detect_collapse holds.
std::vector<AbutmentReport> assemble_abutment(const E2Page& page);

}  // namespace eqk
