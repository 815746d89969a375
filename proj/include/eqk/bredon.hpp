#pragma once

#include <vector>

#include "eqk/abgroup.hpp"
#include "eqk/cochain.hpp"
#include "eqk/orbit_complex.hpp"

namespace eqk {

enum class Theory { K, KO };

/// 2 for K, 8 for KO.
unsigned period(Theory t);
const char* to_string(Theory t);

/// G/H |-> K^{-n}_H(pt) or KO^{-n}_H(pt), with n reduced mod the period.
/// For K and odd n this is the zero functor.
struct CoefficientFunctor {
  Theory theory = Theory::K;
  unsigned n = 0;
};

/// M(G/H) as Z^free (+) (Z/2)^tor.
struct CoefficientRanks {
  std::size_t free = 0;
  std::size_t tor = 0;
};
CoefficientRanks coefficient_ranks(const GroupClass& h, const CoefficientFunctor& m);

/// C^p = sum over p-cells of M(G/stab), differential blocks
/// incidence * restriction, laid out in cell order.
SplitCochainComplex assemble_cochain(const OrbitComplex& x, const CoefficientFunctor& m);

/// H^0 .. H^{dim X}.
std::vector<AbGroup> bredon_cohomology(const OrbitComplex& x, const CoefficientFunctor& m);

}  // namespace eqk
