#include "eqk/rep_ring.hpp"

#include <string>

#include "eqk/error.hpp"

namespace eqk {

namespace {

using GK = GroupClass::Kind;

// Coefficient groups of a point, n = 0..7: free rank and number of Z/2.
struct PointGroup {
  std::size_t free;
  std::size_t two;
};
constexpr PointGroup kKOPoint[8] = {{1, 0}, {0, 1}, {0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}};
constexpr PointGroup kKPoint[8] = {{1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}};
constexpr PointGroup kKSpPoint[8] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 0}};

std::string subset_label(std::size_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t b = 0; (mask >> b) != 0; ++b) {
    if ((mask >> b) & 1) {
      if (!first) s += ",";
      s += std::to_string(b);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

std::size_t k0_rank(const GroupClass& g) {
  switch (g.kind()) {
    case GK::Trivial: return 1;
    case GK::Cyclic: return g.parameter();
    case GK::Elem2: return std::size_t{1} << g.parameter();
    case GK::DihedralOdd: return (g.parameter() + 3) / 2;
  }
  return 0;
}

std::vector<long> irrep_dimensions(const GroupClass& g) {
  std::vector<long> dims(k0_rank(g), 1);
  if (g.kind() == GK::DihedralOdd) {
    for (std::size_t i = 2; i < dims.size(); ++i) dims[i] = 2;
  }
  return dims;
}

std::vector<std::size_t> irrep_conjugates(const GroupClass& g) {
  const std::size_t n = k0_rank(g);
  std::vector<std::size_t> conj(n);
  for (std::size_t j = 0; j < n; ++j) conj[j] = (g.kind() == GK::Cyclic) ? (n - j) % n : j;
  return conj;
}

std::vector<std::string> irrep_labels(const GroupClass& g) {
  std::vector<std::string> out;
  const std::size_t n = k0_rank(g);
  for (std::size_t j = 0; j < n; ++j) {
    switch (g.kind()) {
      case GK::Trivial: out.push_back("triv"); break;
      case GK::Cyclic: out.push_back("chi" + std::to_string(j)); break;
      case GK::Elem2: out.push_back("sgn" + subset_label(j)); break;
      case GK::DihedralOdd:
        out.push_back(j == 0 ? "triv" : j == 1 ? "sign" : "rho" + std::to_string(j - 1));
        break;
    }
  }
  return out;
}

IntMatrix restriction_k0(const InclusionDescriptor& incl) {
  incl.validate();
  using K = InclusionDescriptor::Kind;
  const std::size_t rows = k0_rank(incl.sub);
  const std::size_t cols = k0_rank(incl.big);
  IntMatrix m(rows, cols);
  switch (incl.kind) {
    case K::Identity:
      return IntMatrix::identity(rows);
    case K::TrivialInAnything: {
      auto dims = irrep_dimensions(incl.big);
      for (std::size_t c = 0; c < cols; ++c) m.set(0, c, dims[c]);
      return m;
    }
    case K::CyclicInCyclic:
      // a character j of Z/(mr) restricts to j mod r on Z/r
      for (std::size_t c = 0; c < cols; ++c) m.set(c % rows, c, 1);
      return m;
    case K::Elem2Subset:
      for (std::size_t c = 0; c < cols; ++c) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < incl.injection.size(); ++i) {
          if ((c >> incl.injection[i]) & 1) r |= std::size_t{1} << i;
        }
        m.set(r, c, 1);
      }
      return m;
    case K::ReflectionInDihedral:
      m.set(0, 0, 1);
      m.set(1, 1, 1);
      for (std::size_t c = 2; c < cols; ++c) {
        m.set(0, c, 1);
        m.set(1, c, 1);
      }
      return m;
    case K::RotationInDihedral: {
      const std::size_t mm = incl.big.parameter();
      m.set(0, 0, 1);
      m.set(0, 1, 1);
      for (std::size_t c = 2; c < cols; ++c) {
        const std::size_t h = c - 1;
        m.set(h, c, 1);
        m.set(mm - h, c, 1);
      }
      return m;
    }
  }
  throw Error(ErrorKind::UnsupportedDescriptor, "unknown inclusion", incl.name());
}

RealBasis real_basis(const GroupClass& g) {
  RealBasis b;
  auto conj = irrep_conjugates(g);
  for (std::size_t j = 0; j < conj.size(); ++j) {
    if (conj[j] == j) {
      b.real_type.push_back(j);
    } else if (j < conj[j]) {
      b.complex_type.push_back(j);
    }
  }
  return b;
}

RealTypeCounts real_type_counts(const GroupClass& g) {
  auto b = real_basis(g);
  return {b.real_type.size(), b.complex_type.size(), 0};
}

KOCoefficient ko_point(const GroupClass& g, unsigned n) {
  n %= 8;
  auto b = real_basis(g);
  auto labels = irrep_labels(g);
  KOCoefficient out;
  for (std::size_t j : b.real_type) {
    for (std::size_t t = 0; t < kKOPoint[n].free; ++t) out.free_labels.push_back("R:" + labels[j]);
  }
  for (std::size_t j : b.complex_type) {
    for (std::size_t t = 0; t < kKPoint[n].free; ++t) out.free_labels.push_back("C:" + labels[j]);
  }
  for (std::size_t j : b.real_type) {
    for (std::size_t t = 0; t < kKOPoint[n].two; ++t) out.tor2_labels.push_back("R:" + labels[j]);
  }
  const RealTypeCounts counts = real_type_counts(g);
  out.free_rank = counts.n_r * kKOPoint[n].free + counts.n_c * kKPoint[n].free + counts.n_h * kKSpPoint[n].free;
  out.tor2_rank = counts.n_r * kKOPoint[n].two + counts.n_h * kKSpPoint[n].two;
  return out;
}

KORestriction restriction_ko(const InclusionDescriptor& incl, unsigned n) {
  n %= 8;
  if ((n == 1 || n == 2) && incl.kind == InclusionDescriptor::Kind::CyclicInCyclic && incl.sub.order() % 2 == 0) {
    throw Error(ErrorKind::UnsupportedDescriptor,
                "KO restriction to an even-order cyclic subgroup is not supported in degree " + std::to_string(n),
                incl.name());
  }
  const IntMatrix res = restriction_k0(incl);
  const RealBasis sb = real_basis(incl.sub);
  const RealBasis bb = real_basis(incl.big);
  const auto sconj = irrep_conjugates(incl.sub);
  const KOCoefficient sp = ko_point(incl.sub, n);
  const KOCoefficient bp = ko_point(incl.big, n);
  KORestriction out{IntMatrix(sp.free_rank, bp.free_rank), Mod2Matrix(sp.tor2_rank, bp.tor2_rank),
                    Mod2Matrix(sp.tor2_rank, bp.free_rank)};

  // A restricted real-type irreducible must contain conjugate pairs evenly.
  for (std::size_t c : bb.real_type) {
    for (std::size_t i : sb.complex_type) {
      if (res.at(i, c) != res.at(sconj[i], c)) {
        throw Error(ErrorKind::UnsupportedDescriptor, "restriction does not respect complex conjugation",
                    incl.name());
      }
    }
  }

  const std::size_t sr = sb.real_type.size();
  const std::size_t br = bb.real_type.size();
  auto rr = [&](std::size_t i, std::size_t c) { return res.at(sb.real_type[i], bb.real_type[c]); };
  auto rc = [&](std::size_t i, std::size_t c) { return res.at(sb.complex_type[i], bb.real_type[c]); };
  auto cr = [&](std::size_t i, std::size_t c) { return res.at(sb.real_type[i], bb.complex_type[c]); };
  auto cc_plus = [&](std::size_t i, std::size_t c) { return res.at(sb.complex_type[i], bb.complex_type[c]); };
  auto cc_minus = [&](std::size_t i, std::size_t c) {
    return res.at(sconj[sb.complex_type[i]], bb.complex_type[c]);
  };

  switch (n) {
    case 0:
    case 4: {
      // free basis: real types then complex types on both sides
      const Integer to_complex = n == 0 ? 1 : 2;
      const Integer to_real = n == 0 ? 2 : 1;
      for (std::size_t i = 0; i < sr; ++i) {
        for (std::size_t c = 0; c < br; ++c) out.free.set(i, c, rr(i, c));
        for (std::size_t c = 0; c < bb.complex_type.size(); ++c) out.free.set(i, br + c, to_real * cr(i, c));
      }
      for (std::size_t i = 0; i < sb.complex_type.size(); ++i) {
        for (std::size_t c = 0; c < br; ++c) out.free.set(sr + i, c, to_complex * rc(i, c));
        for (std::size_t c = 0; c < bb.complex_type.size(); ++c) {
          out.free.set(sr + i, br + c, cc_plus(i, c) + cc_minus(i, c));
        }
      }
      break;
    }
    case 1:
      for (std::size_t i = 0; i < sr; ++i) {
        for (std::size_t c = 0; c < br; ++c) out.torsion.set(i, c, mpz_odd_p(rr(i, c).get_mpz_t()));
      }
      break;
    case 2:
    case 6:
      for (std::size_t i = 0; i < sb.complex_type.size(); ++i) {
        for (std::size_t c = 0; c < bb.complex_type.size(); ++c) out.free.set(i, c, cc_plus(i, c) - cc_minus(i, c));
      }
      if (n == 2) {
        for (std::size_t i = 0; i < sr; ++i) {
          for (std::size_t c = 0; c < br; ++c) out.torsion.set(i, c, mpz_odd_p(rr(i, c).get_mpz_t()));
          // realification K^{-2} -> KO^{-2} is onto
          for (std::size_t c = 0; c < bb.complex_type.size(); ++c) {
            out.cross.set(i, c, mpz_odd_p(cr(i, c).get_mpz_t()));
          }
        }
      }
      break;
    default:
      break;
  }
  return out;
}

}  // namespace eqk
