#include "eqk/cochain.hpp"

#include <algorithm>
#include <string>

#include "eqk/error.hpp"
#include "eqk/smith.hpp"

namespace eqk {

namespace {

[[noreturn]] void not_complex(const std::string& what, std::size_t p) {
  throw Error(ErrorKind::NotACochainComplex, what + " at degree " + std::to_string(p), "degree " + std::to_string(p));
}

// Block matrix assembly helper: copies `block` into `dst` at (r0, c0).
void put(IntMatrix& dst, std::size_t r0, std::size_t c0, const IntMatrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    if (block.row(i).empty()) continue;
    IntMatrix::Row row = dst.row(r0 + i);
    for (const auto& [j, x] : block.row(i)) row.emplace_back(c0 + j, x);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    dst.set_row(r0 + i, std::move(row));
  }
}

// Lift of the full differential C^p -> C^{p+1} to an integer matrix.
IntMatrix lifted_differential(const SplitCochainComplex& c, std::size_t p) {
  const std::size_t rows = c.free_rank(p + 1) + c.tor2_rank(p + 1);
  const std::size_t cols = c.free_rank(p) + c.tor2_rank(p);
  IntMatrix d(rows, cols);
  put(d, 0, 0, c.free_map(p));
  put(d, c.free_rank(p + 1), 0, c.cross_map(p).lift());
  put(d, c.free_rank(p + 1), c.free_rank(p), c.torsion_map(p).lift());
  return d;
}

}  // namespace

SplitCochainComplex::SplitCochainComplex(std::vector<std::size_t> free_ranks, std::vector<std::size_t> tor2_ranks,
                                         std::vector<IntMatrix> free_maps, std::vector<Mod2Matrix> torsion_maps,
                                         std::vector<Mod2Matrix> cross_maps)
    : free_ranks_(std::move(free_ranks)),
      tor2_ranks_(std::move(tor2_ranks)),
      free_maps_(std::move(free_maps)),
      torsion_maps_(std::move(torsion_maps)),
      cross_maps_(std::move(cross_maps)) {
  if (free_ranks_.empty()) throw Error(ErrorKind::InvalidInput, "a cochain complex needs at least one degree");
  if (tor2_ranks_.empty()) tor2_ranks_.assign(free_ranks_.size(), 0);
  if (tor2_ranks_.size() != free_ranks_.size()) throw Error(ErrorKind::InvalidInput, "rank lists differ in length");
  const std::size_t n = free_ranks_.size() - 1;
  if (free_maps_.empty()) {
    for (std::size_t p = 0; p < n; ++p) free_maps_.emplace_back(free_ranks_[p + 1], free_ranks_[p]);
  }
  if (torsion_maps_.empty()) {
    for (std::size_t p = 0; p < n; ++p) torsion_maps_.emplace_back(tor2_ranks_[p + 1], tor2_ranks_[p]);
  }
  if (cross_maps_.empty()) {
    for (std::size_t p = 0; p < n; ++p) cross_maps_.emplace_back(tor2_ranks_[p + 1], free_ranks_[p]);
  }
  if (free_maps_.size() != n || torsion_maps_.size() != n || cross_maps_.size() != n) {
    throw Error(ErrorKind::InvalidInput, "expected one map per consecutive pair of degrees");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (free_maps_[p].rows() != free_ranks_[p + 1] || free_maps_[p].cols() != free_ranks_[p]) {
      not_complex("free block has the wrong shape", p);
    }
    if (torsion_maps_[p].rows() != tor2_ranks_[p + 1] || torsion_maps_[p].cols() != tor2_ranks_[p]) {
      not_complex("torsion block has the wrong shape", p);
    }
    if (cross_maps_[p].rows() != tor2_ranks_[p + 1] || cross_maps_[p].cols() != free_ranks_[p]) {
      not_complex("cross block has the wrong shape", p);
    }
  }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (!(free_maps_[p + 1] * free_maps_[p]).is_zero()) not_complex("free blocks do not compose to zero", p);
    if (!(torsion_maps_[p + 1] * torsion_maps_[p]).is_zero()) {
      not_complex("torsion blocks do not compose to zero", p);
    }
    Mod2Matrix mixed = torsion_maps_[p + 1] * cross_maps_[p] + cross_maps_[p + 1] * Mod2Matrix::reduce(free_maps_[p]);
    if (!mixed.is_zero()) not_complex("cross blocks violate d o d = 0", p);
  }
}

SplitCochainComplex SplitCochainComplex::integral(std::vector<IntMatrix> free_maps) {
  if (free_maps.empty()) throw Error(ErrorKind::InvalidInput, "ranks are ambiguous without maps");
  std::vector<std::size_t> ranks{free_maps.front().cols()};
  for (const auto& f : free_maps) ranks.push_back(f.rows());
  return integral(std::move(ranks), std::move(free_maps));
}

SplitCochainComplex SplitCochainComplex::integral(std::vector<std::size_t> free_ranks,
                                                  std::vector<IntMatrix> free_maps) {
  std::vector<std::size_t> tor(free_ranks.size(), 0);
  return SplitCochainComplex(std::move(free_ranks), std::move(tor), std::move(free_maps), {}, {});
}

SplitCochainComplex SplitCochainComplex::zero(std::vector<std::size_t> free_ranks,
                                              std::vector<std::size_t> tor2_ranks) {
  return SplitCochainComplex(std::move(free_ranks), std::move(tor2_ranks), {}, {}, {});
}

bool SplitCochainComplex::is_integral() const {
  for (std::size_t t : tor2_ranks_) {
    if (t != 0) return false;
  }
  return true;
}

namespace {

struct MapProfile {
  RankProfile free;
  std::size_t torsion_rank = 0;
  bool has_cross = false;
};

MapProfile profile_of(const SplitCochainComplex& c, std::size_t p) {
  MapProfile m;
  m.free = elimination_profile(c.free_map(p));
  m.torsion_rank = rank_mod2(c.torsion_map(p));
  m.has_cross = !c.cross_map(p).is_zero();
  return m;
}

AbGroup split_cohomology(const SplitCochainComplex& c, std::size_t p, const MapProfile* out_map,
                         const MapProfile* in_map) {
  std::size_t free = c.free_rank(p);
  std::size_t twos = c.tor2_rank(p);
  std::vector<Integer> orders;
  if (out_map != nullptr) {
    free -= out_map->free.rank;
    twos -= out_map->torsion_rank;
  }
  if (in_map != nullptr) {
    free -= in_map->free.rank;
    twos -= in_map->torsion_rank;
    for (const auto& d : in_map->free.factors) {
      if (d != 1) orders.push_back(d);
    }
  }
  orders.insert(orders.end(), twos, Integer(2));
  AbGroup g = AbGroup::from_orders(orders);
  return direct_sum(AbGroup(free), g);
}

}  // namespace

AbGroup detail::cohomology_lattice(const SplitCochainComplex& c, std::size_t p) {
  if (p > c.length()) throw Error(ErrorKind::InvalidInput, "degree out of range");
  const std::size_t fp = c.free_rank(p);
  const std::size_t n = fp + c.tor2_rank(p);

  // Kernel of d_p on C^p, pulled back to Z^n: solutions of
  // [F 0 0; X T -2I] (x, y, z) = 0, projected to (x, y).
  IntMatrix basis;
  if (p == c.length()) {
    basis = IntMatrix::identity(n);
  } else {
    const std::size_t f1 = c.free_rank(p + 1);
    const std::size_t t1 = c.tor2_rank(p + 1);
    IntMatrix g(f1 + t1, n + t1);
    put(g, 0, 0, lifted_differential(c, p));
    for (std::size_t j = 0; j < t1; ++j) g.set(f1 + j, n + j, -2);
    SmithForm s = smith_normal_form(g);
    std::size_t rank = 0;
    while (rank < std::min(g.rows(), g.cols()) && s.diagonal.at(rank, rank) != 0) ++rank;
    const std::size_t k = g.cols() - rank;
    basis = IntMatrix(n, k);
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix::Row row;
      for (const auto& [j, x] : s.right.row(i)) {
        if (j >= rank) row.emplace_back(j - rank, x);
      }
      basis.set_row(i, std::move(row));
    }
  }
  const std::size_t k = basis.cols();

  // Generators of the relations: image of d_{p-1} and 2 on torsion coordinates.
  std::size_t ngen = n - fp;
  IntMatrix incoming;
  if (p > 0) {
    incoming = lifted_differential(c, p - 1);
    ngen += incoming.cols();
  }
  IntMatrix gens(n, ngen);
  if (p > 0) put(gens, 0, 0, incoming);
  for (std::size_t j = fp; j < n; ++j) gens.set(j, ngen - (n - fp) + (j - fp), 2);

  // Coordinates of the generators in the kernel basis.
  SmithForm s = smith_normal_form(basis);
  IntMatrix w = s.left * gens;
  IntMatrix scaled(k, ngen);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, x] : w.row(i)) {
      if (i >= k) throw Error(ErrorKind::NotACochainComplex, "image is not contained in the kernel");
      const Integer d = s.diagonal.at(i, i);
      if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
        throw Error(ErrorKind::NotACochainComplex, "image is not contained in the kernel");
      }
      scaled.set(i, j, x / d);
    }
  }
  IntMatrix coords = s.right * scaled;
  RankProfile prof = elimination_profile(coords);
  std::vector<Integer> orders;
  for (const auto& d : prof.factors) {
    if (d != 1) orders.push_back(d);
  }
  return direct_sum(AbGroup(k - prof.rank), AbGroup::from_orders(orders));
}

AbGroup cohomology(const SplitCochainComplex& c, std::size_t p) {
  if (p > c.length()) throw Error(ErrorKind::InvalidInput, "degree out of range");
  const bool cross_in = p > 0 && !c.cross_map(p - 1).is_zero();
  const bool cross_out = p < c.length() && !c.cross_map(p).is_zero();
  if (cross_in || cross_out) return detail::cohomology_lattice(c, p);
  MapProfile out_map, in_map;
  if (p < c.length()) out_map = profile_of(c, p);
  if (p > 0) in_map = profile_of(c, p - 1);
  return split_cohomology(c, p, p < c.length() ? &out_map : nullptr, p > 0 ? &in_map : nullptr);
}

std::vector<AbGroup> cohomology_all(const SplitCochainComplex& c) {
  const std::size_t n = c.length();
  std::vector<MapProfile> maps;
  maps.reserve(n);
  for (std::size_t p = 0; p < n; ++p) maps.push_back(profile_of(c, p));
  std::vector<AbGroup> out;
  for (std::size_t p = 0; p <= n; ++p) {
    const bool cross = (p > 0 && maps[p - 1].has_cross) || (p < n && maps[p].has_cross);
    if (cross) {
      out.push_back(detail::cohomology_lattice(c, p));
    } else {
      out.push_back(split_cohomology(c, p, p < n ? &maps[p] : nullptr, p > 0 ? &maps[p - 1] : nullptr));
    }
  }
  return out;
}

SplitCochainComplex tensor_mod2(const SplitCochainComplex& c) {
  if (!c.is_integral()) throw Error(ErrorKind::InvalidInput, "tensor_mod2 expects an integral complex");
  std::vector<std::size_t> ranks;
  std::vector<Mod2Matrix> maps;
  for (std::size_t p = 0; p <= c.length(); ++p) ranks.push_back(c.free_rank(p));
  for (std::size_t p = 0; p < c.length(); ++p) maps.push_back(Mod2Matrix::reduce(c.free_map(p)));
  std::vector<std::size_t> zeros(ranks.size(), 0);
  return SplitCochainComplex(zeros, ranks, {}, std::move(maps), {});
}

std::vector<UctDegree> uct_report(const SplitCochainComplex& c) {
  const auto integral = cohomology_all(c);
  const auto mod2 = cohomology_all(tensor_mod2(c));
  std::vector<UctDegree> out;
  for (std::size_t p = 0; p <= c.length(); ++p) {
    UctDegree d;
    d.mod2_dim = mod2[p].two_rank();
    d.tensor_dim = integral[p].free_rank() + integral[p].two_rank();
    d.tor_dim = p < c.length() ? integral[p + 1].two_rank() : 0;
    out.push_back(d);
  }
  return out;
}

bool uct_verify(const SplitCochainComplex& c) {
  for (const auto& d : uct_report(c)) {
    if (!d.holds()) return false;
  }
  return true;
}

}  // namespace eqk
