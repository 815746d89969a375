#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eqk/coxeter.hpp"
#include "eqk/orbit_complex.hpp"

namespace eqk {

/// A cell of a finite CW complex with integral boundary. `panel` is the
/// spherical subset at which the cell was created; the cell lies in B_J
/// exactly when J is contained in `panel`.
struct PanelCell {
  std::string label;
  SubsetMask panel = 0;
  std::vector<std::pair<std::size_t, long>> boundary;  // ((dim-1)-cell index, coefficient)
};

class PanelComplex {
 public:
  std::vector<std::vector<PanelCell>> cells;  // by dimension

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t cell_count() const;
  /// Cellular boundary C_p -> C_{p-1}: rows (p-1)-cells, columns p-cells.
  IntMatrix boundary_matrix(std::size_t p) const;
  /// Cells of B_J, as (dim, index) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> panel(SubsetMask j) const;
  /// Euler characteristic.
  long euler_characteristic() const;
};

/// Recursive panel construction: B_J is a point for maximal J, reuses
/// the union of the larger panels when that union is already contractible,
/// fills graphs with edges and 2-cells, and cones off anything else.
PanelComplex build_bestvina_complex(const SphericalPoset& q);

/// Quotient cells of the basic construction: the cells of B with stabilizer
/// W_{panel(cell)}.
OrbitComplex orbit_complex_from_panel(const PanelComplex& b, const SphericalPoset& q);

/// Order complex of the spherical poset, stabilizer of a chain its minimum.
OrbitComplex build_davis_orbit_complex(const SphericalPoset& q);

}  // namespace eqk
