#include "eqk/amalgam.hpp"

#include <string>

#include "eqk/error.hpp"

namespace eqk {

bool AmalgamSpec::all_r_odd() const {
  for (auto x : r) {
    if (x % 2 == 0) return false;
  }
  return true;
}

void AmalgamSpec::validate() const {
  if (m.size() != r.size() + 1) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(r.size() + 1) + " values of m for " +
                                             std::to_string(r.size()) + " values of r", "m");
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 1) throw Error(ErrorKind::InvalidInput, "r_" + std::to_string(i + 1) + " must be positive", "r");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 2) throw Error(ErrorKind::InvalidInput, "m_" + std::to_string(i) + " must be at least 2", "m");
  }
}

OrbitComplex build_amalgam_orbit_complex(const AmalgamSpec& spec) {
  spec.validate();
  const std::size_t k = spec.k();
  std::vector<std::vector<Cell>> cells(k > 0 ? 2 : 1);
  for (std::size_t i = 0; i <= k; ++i) {
    cells[0].push_back({"v" + std::to_string(i), GroupClass::cyclic(spec.vertex_order(i))});
  }
  std::vector<std::vector<Incidence>> inc(cells.size());
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t ri = spec.r_at(i);
    cells[1].push_back({"e" + std::to_string(i), GroupClass::cyclic(ri)});
    const std::size_t e = i - 1;
    inc[1].push_back({e, i - 1, +1, InclusionDescriptor::cyclic_in_cyclic(ri, spec.m[i - 1] * spec.r_at(i - 1))});
    inc[1].push_back({e, i, -1, InclusionDescriptor::cyclic_in_cyclic(ri, spec.m[i] * spec.r_at(i + 1))});
  }
  return OrbitComplex(std::move(cells), std::move(inc));
}

std::size_t TreeBall::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

TreeBall expand_tree(const AmalgamSpec& spec, std::size_t radius, std::size_t budget) {
  spec.validate();
  const std::size_t k = spec.k();
  TreeBall ball;
  ball.vertices.push_back({0, spec.vertex_order(0), 0, 0});
  std::size_t frontier_begin = 0;
  for (std::size_t depth = 0; depth < radius; ++depth) {
    const std::size_t frontier_end = ball.vertices.size();
    for (std::size_t v = frontier_begin; v < frontier_end; ++v) {
      const auto here = ball.vertices[v];
      const std::size_t t = here.type;
      // one edge per coset of the edge stabilizer in the vertex stabilizer
      std::size_t down = t > 0 ? spec.m[t] * spec.r_at(t + 1) : 0;
      std::size_t up = t < k ? spec.m[t] * spec.r_at(t) : 0;
      if (v != 0) {
        if (ball.vertices[here.parent].type + 1 == t) {
          --down;
        } else {
          --up;
        }
      }
      auto grow = [&](std::size_t type, std::size_t count) {
        for (std::size_t c = 0; c < count; ++c) {
          if (ball.vertices.size() >= budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "tree ball exceeds the budget of " + std::to_string(budget) + " vertices", "radius");
          }
          ball.vertices.push_back({type, spec.vertex_order(type), depth + 1, v});
          ball.edges.emplace_back(v, ball.vertices.size() - 1);
        }
      };
      if (t > 0) grow(t - 1, down);
      if (t < k) grow(t + 1, up);
    }
    frontier_begin = frontier_end;
  }
  return ball;
}

}  // namespace eqk
