#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eqk/orbit_complex.hpp"

namespace eqk {

/// Z/(r1 m0) *_{Z/r1} Z/(r1 r2 m1) *_{Z/r2} ... *_{Z/rk} Z/(rk mk).
struct AmalgamSpec {
  std::vector<std::uint64_t> r;  // r_1..r_k
  std::vector<std::uint64_t> m;  // m_0..m_k

  std::size_t k() const { return r.size(); }
  /// r_i with the convention r_0 = r_{k+1} = 1.
  std::uint64_t r_at(std::size_t i) const { return (i == 0 || i > r.size()) ? 1 : r[i - 1]; }
  std::uint64_t vertex_order(std::size_t i) const { return m.at(i) * r_at(i) * r_at(i + 1); }
  bool all_r_odd() const;
  /// Throws InvalidInput naming the offending field.
  void validate() const;
};

/// The quotient path: vertex i stabilized by Z/(m_i r_i r_{i+1}), edge i
/// (1..k) by Z/r_i, joining vertices i-1 (+1) and i (-1).
OrbitComplex build_amalgam_orbit_complex(const AmalgamSpec& spec);

/// Ball of the Bass-Serre tree around a type-0 vertex.
struct TreeBall {
  struct Vertex {
    std::size_t type = 0;
    std::uint64_t stabilizer_order = 1;
    std::size_t depth = 0;
    std::size_t parent = 0;  // self for the root
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t degree(std::size_t v) const;
};

TreeBall expand_tree(const AmalgamSpec& spec, std::size_t radius, std::size_t budget = 10000);

}  // namespace eqk
