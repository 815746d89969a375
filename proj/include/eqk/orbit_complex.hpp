#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqk/group_class.hpp"
#include "eqk/matrix.hpp"

namespace eqk {

struct Cell {
  std::string label;
  GroupClass stabilizer;
};

/// Attaching number of a p-cell `cell` on a (p-1)-cell `face`, with the
/// inclusion stab(cell) <= stab(face).
struct Incidence {
  std::size_t cell = 0;
  std::size_t face = 0;
  long coefficient = 0;
  InclusionDescriptor descriptor;
};

/// Quotient cell structure of a proper G-CW complex.
class OrbitComplex {
 public:
  OrbitComplex() = default;
  /// cells[p] lists the p-cells; incidences[p] (p >= 1) attaches p-cells to
  /// (p-1)-cells, incidences[0] must be empty. Validates descriptors and
  /// that the coboundary squares to zero.
  OrbitComplex(std::vector<std::vector<Cell>> cells, std::vector<std::vector<Incidence>> incidences);

  /// Top dimension; -1 for the empty complex.
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<Cell>& cells(std::size_t p) const { return cells_.at(p); }
  const std::vector<Incidence>& incidences(std::size_t p) const { return incidences_.at(p); }
  std::size_t cell_count() const;

  /// Integer coboundary C^{p-1} -> C^p: rows are p-cells, columns (p-1)-cells.
  IntMatrix coboundary(std::size_t p) const;

 private:
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::vector<Incidence>> incidences_;
};

}  // namespace eqk
