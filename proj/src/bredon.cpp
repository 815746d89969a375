#include "eqk/bredon.hpp"

#include <algorithm>
#include <map>

#include "eqk/error.hpp"
#include "eqk/rep_ring.hpp"

namespace eqk {

unsigned period(Theory t) { return t == Theory::K ? 2 : 8; }

const char* to_string(Theory t) { return t == Theory::K ? "k" : "ko"; }

CoefficientRanks coefficient_ranks(const GroupClass& g, const CoefficientFunctor& m) {
  if (m.theory == Theory::K) return m.n % 2 == 0 ? CoefficientRanks{k0_rank(g), 0} : CoefficientRanks{};
  auto k = ko_point(g, m.n % 8);
  return {k.free_rank, k.tor2_rank};
}

namespace {

KORestriction restriction_for(const InclusionDescriptor& d, const CoefficientFunctor& m) {
  if (m.theory == Theory::KO) return restriction_ko(d, m.n % 8);
  if (m.n % 2 == 1) {
    return {IntMatrix(0, 0), Mod2Matrix(0, 0), Mod2Matrix(0, 0)};
  }
  IntMatrix res = restriction_k0(d);
  return {res, Mod2Matrix(0, 0), Mod2Matrix(0, res.cols())};
}

}  // namespace

SplitCochainComplex assemble_cochain(const OrbitComplex& x, const CoefficientFunctor& m) {
  const int dim = x.dimension();
  if (dim < 0) return SplitCochainComplex::zero({0}, {0});
  const std::size_t top = static_cast<std::size_t>(dim);

  std::vector<std::vector<CoefficientRanks>> values(top + 1);
  std::vector<std::vector<CoefficientRanks>> offsets(top + 1);
  std::vector<std::size_t> free_ranks(top + 1, 0), tor_ranks(top + 1, 0);
  for (std::size_t p = 0; p <= top; ++p) {
    for (const auto& cell : x.cells(p)) {
      const CoefficientRanks v = coefficient_ranks(cell.stabilizer, m);
      values[p].push_back(v);
      offsets[p].push_back({free_ranks[p], tor_ranks[p]});
      free_ranks[p] += v.free;
      tor_ranks[p] += v.tor;
    }
  }

  std::map<InclusionDescriptor, KORestriction> cache;
  std::vector<IntMatrix> free_maps;
  std::vector<Mod2Matrix> tor_maps, cross_maps;
  for (std::size_t p = 0; p < top; ++p) {
    std::vector<IntMatrix::Row> frows(free_ranks[p + 1]);
    std::vector<Mod2Matrix::Row> trows(tor_ranks[p + 1]);
    std::vector<Mod2Matrix::Row> xrows(tor_ranks[p + 1]);
    for (const auto& inc : x.incidences(p + 1)) {
      auto it = cache.find(inc.descriptor);
      if (it == cache.end()) it = cache.emplace(inc.descriptor, restriction_for(inc.descriptor, m)).first;
      const KORestriction& r = it->second;
      const CoefficientRanks row0 = offsets[p + 1][inc.cell];
      const CoefficientRanks col0 = offsets[p][inc.face];
      const bool odd = inc.coefficient % 2 != 0;
      for (std::size_t i = 0; i < r.free.rows(); ++i) {
        for (const auto& [j, v] : r.free.row(i)) frows[row0.free + i].emplace_back(col0.free + j, v * inc.coefficient);
      }
      if (!odd) continue;
      for (std::size_t i = 0; i < r.torsion.rows(); ++i) {
        for (std::size_t j : r.torsion.row(i)) trows[row0.tor + i].push_back(col0.tor + j);
      }
      for (std::size_t i = 0; i < r.cross.rows(); ++i) {
        for (std::size_t j : r.cross.row(i)) xrows[row0.tor + i].push_back(col0.free + j);
      }
    }
    IntMatrix f(free_ranks[p + 1], free_ranks[p]);
    Mod2Matrix t(tor_ranks[p + 1], tor_ranks[p]);
    Mod2Matrix c(tor_ranks[p + 1], free_ranks[p]);
    for (std::size_t i = 0; i < frows.size(); ++i) {
      std::sort(frows[i].begin(), frows[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      f.set_row(i, std::move(frows[i]));
    }
    for (std::size_t i = 0; i < trows.size(); ++i) {
      std::sort(trows[i].begin(), trows[i].end());
      std::sort(xrows[i].begin(), xrows[i].end());
      t.set_row(i, std::move(trows[i]));
      c.set_row(i, std::move(xrows[i]));
    }
    free_maps.push_back(std::move(f));
    tor_maps.push_back(std::move(t));
    cross_maps.push_back(std::move(c));
  }
  return SplitCochainComplex(free_ranks, tor_ranks, std::move(free_maps), std::move(tor_maps), std::move(cross_maps));
}

std::vector<AbGroup> bredon_cohomology(const OrbitComplex& x, const CoefficientFunctor& m) {
  return cohomology_all(assemble_cochain(x, m));
}

}  // namespace eqk
