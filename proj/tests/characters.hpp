// Character-table oracle: explicit group elements, explicit embeddings and
// numeric inner products. Independent of the restriction formulas.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "eqk/group_class.hpp"

namespace oracle {

using cplx = std::complex<double>;

// An element is (rotation exponent a, reflection flag f) for dihedral groups,
// an exponent for cyclic groups, a bitmask for elementary abelian groups.
struct Elem {
  std::uint64_t a = 0;
  bool f = false;
};

inline std::vector<Elem> elements(const eqk::GroupClass& g) {
  using K = eqk::GroupClass::Kind;
  std::vector<Elem> out;
  switch (g.kind()) {
    case K::Trivial: out.push_back({}); break;
    case K::Cyclic:
      for (std::uint64_t a = 0; a < g.parameter(); ++a) out.push_back({a, false});
      break;
    case K::Elem2:
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << g.parameter()); ++a) out.push_back({a, false});
      break;
    case K::DihedralOdd:
      for (std::uint64_t a = 0; a < g.parameter(); ++a) {
        out.push_back({a, false});
        out.push_back({a, true});
      }
      break;
  }
  return out;
}

inline cplx character(const eqk::GroupClass& g, std::size_t irrep, const Elem& x) {
  using K = eqk::GroupClass::Kind;
  const double pi = std::acos(-1.0);
  switch (g.kind()) {
    case K::Trivial: return 1.0;
    case K::Cyclic: return std::polar(1.0, 2 * pi * double(irrep * x.a % g.parameter()) / double(g.parameter()));
    case K::Elem2: return (__builtin_popcountll(irrep & x.a) % 2) ? -1.0 : 1.0;
    case K::DihedralOdd:
      if (irrep == 0) return 1.0;
      if (irrep == 1) return x.f ? -1.0 : 1.0;
      if (x.f) return 0.0;
      return 2 * std::cos(2 * pi * double((irrep - 1) * x.a) / double(g.parameter()));
  }
  return 0.0;
}

// Image of a subgroup element under the descriptor's embedding.
inline Elem embed(const eqk::InclusionDescriptor& d, const Elem& x) {
  using K = eqk::InclusionDescriptor::Kind;
  switch (d.kind) {
    case K::Identity: return x;
    case K::TrivialInAnything: return {};
    case K::CyclicInCyclic: return {x.a * (d.big.order() / d.sub.order()), false};
    case K::Elem2Subset: {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < d.injection.size(); ++i) {
        if ((x.a >> i) & 1) out |= std::uint64_t{1} << d.injection[i];
      }
      return {out, false};
    }
    case K::ReflectionInDihedral: return {0, x.a == 1};
    case K::RotationInDihedral: return {x.a, false};
  }
  return {};
}

inline std::size_t irrep_count(const eqk::GroupClass& g) {
  using K = eqk::GroupClass::Kind;
  switch (g.kind()) {
    case K::Trivial: return 1;
    case K::Cyclic: return g.parameter();
    case K::Elem2: return std::size_t{1} << g.parameter();
    case K::DihedralOdd: return (g.parameter() + 3) / 2;
  }
  return 0;
}

// Multiplicity of sub irrep i in the restriction of big irrep c.
inline long multiplicity(const eqk::InclusionDescriptor& d, std::size_t i, std::size_t c) {
  cplx s = 0;
  auto els = elements(d.sub);
  for (const auto& x : els) s += character(d.big, c, embed(d, x)) * std::conj(character(d.sub, i, x));
  return std::lround(s.real() / double(els.size()));
}

}  // namespace oracle
