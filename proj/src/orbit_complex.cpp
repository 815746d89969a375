#include "eqk/orbit_complex.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "eqk/error.hpp"

namespace eqk {

OrbitComplex::OrbitComplex(std::vector<std::vector<Cell>> cells, std::vector<std::vector<Incidence>> incidences)
    : cells_(std::move(cells)), incidences_(std::move(incidences)) {
  if (incidences_.size() < cells_.size()) incidences_.resize(cells_.size());
  if (incidences_.size() != cells_.size()) throw Error(ErrorKind::InvalidInput, "incidences beyond the top dimension");
  if (!incidences_.empty() && !incidences_[0].empty()) {
    throw Error(ErrorKind::InvalidInput, "0-cells cannot have faces");
  }
  for (std::size_t p = 1; p < cells_.size(); ++p) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& inc : incidences_[p]) {
      const std::string where = "incidence in dimension " + std::to_string(p);
      if (inc.cell >= cells_[p].size() || inc.face >= cells_[p - 1].size()) {
        throw Error(ErrorKind::InvalidInput, where + " refers to a missing cell", where);
      }
      if (inc.coefficient == 0) throw Error(ErrorKind::InvalidInput, where + " has coefficient 0", where);
      if (!seen.insert({inc.cell, inc.face}).second) {
        throw Error(ErrorKind::InvalidInput, where + " is repeated", where);
      }
      const auto& higher = cells_[p][inc.cell];
      const auto& lower = cells_[p - 1][inc.face];
      if (inc.descriptor.sub != higher.stabilizer || inc.descriptor.big != lower.stabilizer) {
        throw Error(ErrorKind::UnsupportedDescriptor,
                    "descriptor " + inc.descriptor.name() + " does not match " + higher.label + " -> " + lower.label,
                    inc.descriptor.name());
      }
      inc.descriptor.validate();
    }
  }
  for (std::size_t p = 2; p < cells_.size(); ++p) {
    if (!(coboundary(p) * coboundary(p - 1)).is_zero()) {
      throw Error(ErrorKind::NotACochainComplex, "cell incidences do not square to zero in dimension " +
                                                     std::to_string(p));
    }
  }
}

std::size_t OrbitComplex::cell_count() const {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.size();
  return n;
}

IntMatrix OrbitComplex::coboundary(std::size_t p) const {
  if (p == 0 || p >= cells_.size()) throw Error(ErrorKind::InvalidInput, "coboundary degree out of range");
  IntMatrix m(cells_[p].size(), cells_[p - 1].size());
  std::vector<IntMatrix::Row> rows(cells_[p].size());
  for (const auto& inc : incidences_[p]) rows[inc.cell].emplace_back(inc.face, Integer(inc.coefficient));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::sort(rows[i].begin(), rows[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    m.set_row(i, std::move(rows[i]));
  }
  return m;
}

}  // namespace eqk
