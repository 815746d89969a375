#include "eqk/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "eqk/error.hpp"

namespace eqk {

namespace {

std::vector<std::size_t> bits_of(SubsetMask j) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < 64; ++b) {
    if ((j >> b) & 1) out.push_back(b);
  }
  return out;
}

bool less_by_size(SubsetMask a, SubsetMask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Classifies one connected component of the Coxeter graph (edges where
// m_ij != 2). Returns nothing when the component generates an infinite group.
std::optional<FiniteComponent> classify(const CoxeterMatrix& m, const std::vector<std::size_t>& gens) {
  FiniteComponent c;
  c.generators = gens;
  c.rank = gens.size();
  if (c.rank == 1) {
    c.family = 'A';
    return c;
  }
  std::vector<std::vector<std::size_t>> adj(c.rank);
  std::size_t edges = 0;
  for (std::size_t a = 0; a < c.rank; ++a) {
    for (std::size_t b = a + 1; b < c.rank; ++b) {
      const auto x = m.at(gens[a], gens[b]);
      if (x == 2) continue;
      if (x == 0) return std::nullopt;
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
    }
  }
  if (c.rank == 2) {
    const auto x = m.at(gens[0], gens[1]);
    if (x == 3) {
      c.family = 'A';
    } else if (x == 4) {
      c.family = 'B';
    } else {
      c.family = 'I';
      c.m = x;
    }
    return c;
  }
  if (edges != c.rank - 1) return std::nullopt;  // contains a cycle

  std::vector<std::size_t> branch;
  for (std::size_t a = 0; a < c.rank; ++a) {
    if (adj[a].size() > 3) return std::nullopt;
    if (adj[a].size() == 3) branch.push_back(a);
  }
  std::vector<std::pair<std::size_t, std::size_t>> heavy;  // (a, b) with label > 3
  for (std::size_t a = 0; a < c.rank; ++a) {
    for (std::size_t b : adj[a]) {
      if (a < b && m.at(gens[a], gens[b]) > 3) heavy.emplace_back(a, b);
    }
  }

  if (branch.size() > 1) return std::nullopt;
  if (branch.size() == 1) {
    if (!heavy.empty()) return std::nullopt;
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[branch[0]]) {
      std::size_t len = 1, prev = branch[0], cur = start;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      c.family = 'D';
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      c.family = 'E';
    } else {
      return std::nullopt;
    }
    return c;
  }

  // A path: order its vertices.
  std::size_t end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<std::size_t> order{end};
  while (order.size() < c.rank) {
    const std::size_t cur = order.back();
    for (std::size_t nb : adj[cur]) {
      if (order.size() < 2 || nb != order[order.size() - 2]) {
        order.push_back(nb);
        break;
      }
    }
  }
  if (heavy.empty()) {
    c.family = 'A';
    return c;
  }
  if (heavy.size() > 1) return std::nullopt;
  const auto [ha, hb] = heavy[0];
  const std::size_t pa = std::find(order.begin(), order.end(), ha) - order.begin();
  const std::size_t pb = std::find(order.begin(), order.end(), hb) - order.begin();
  const std::size_t pos = std::min(pa, pb);  // edge index along the path
  const bool at_end = pos == 0 || pos == c.rank - 2;
  const auto label = m.at(gens[ha], gens[hb]);
  if (label == 4) {
    if (at_end) {
      c.family = 'B';
      return c;
    }
    if (c.rank == 4) {
      c.family = 'F';
      return c;
    }
    return std::nullopt;
  }
  if (label == 5 && at_end && c.rank <= 4) {
    c.family = 'H';
    return c;
  }
  return std::nullopt;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<std::uint64_t>> m) : m_(std::move(m)) {
  const std::size_t n = m_.size();
  if (n > 62) throw Error(ErrorKind::InvalidInput, "at most 62 generators are supported", "size");
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw Error(ErrorKind::InvalidInput, "Coxeter matrix is not square", "m");
    if (m_[i][i] != 1) {
      throw Error(ErrorKind::InvalidInput, "diagonal entry " + std::to_string(i) + " is not 1", "m");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string where = "m[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (m_[i][j] != m_[j][i]) throw Error(ErrorKind::InvalidInput, "Coxeter matrix is not symmetric at " + where, "m");
      if (m_[i][j] == 1) {
        throw Error(ErrorKind::InvalidInput, "off-diagonal entry " + where + " must be >= 2 or 0 (infinity)", "m");
      }
    }
  }
}

bool CoxeterMatrix::is_right_angled() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && m_[i][j] != 2 && m_[i][j] != 0) return false;
    }
  }
  return true;
}

std::string FiniteComponent::name() const {
  if (family == 'I') return "I2(" + std::to_string(m) + ")";
  return std::string(1, family) + std::to_string(rank);
}

std::optional<std::vector<FiniteComponent>> finite_type(const CoxeterMatrix& m, SubsetMask j) {
  std::vector<FiniteComponent> out;
  SubsetMask left = j;
  while (left != 0) {
    const std::size_t start = std::countr_zero(left);
    std::vector<std::size_t> comp{start};
    left &= ~(SubsetMask{1} << start);
    for (std::size_t idx = 0; idx < comp.size(); ++idx) {
      for (std::size_t b : bits_of(left)) {
        if (m.at(comp[idx], b) != 2) {
          comp.push_back(b);
          left &= ~(SubsetMask{1} << b);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    auto c = classify(m, comp);
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

std::string type_name(const std::vector<FiniteComponent>& components) {
  if (components.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].name();
  }
  return s;
}

std::string subset_name(SubsetMask j) {
  std::string s = "{";
  bool first = true;
  for (std::size_t b : bits_of(j)) {
    if (!first) s += ",";
    s += "s" + std::to_string(b);
    first = false;
  }
  return s + "}";
}

SphericalPoset::SphericalPoset(const CoxeterMatrix& m, std::vector<SubsetMask> elements)
    : m_(m), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), less_by_size);
}

bool SphericalPoset::contains(SubsetMask j) const {
  return std::binary_search(elements_.begin(), elements_.end(), j, less_by_size);
}

std::size_t SphericalPoset::index_of(SubsetMask j) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), j, less_by_size);
  if (it == elements_.end() || *it != j) {
    throw Error(ErrorKind::InvalidInput, subset_name(j) + " is not spherical", subset_name(j));
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

SphericalPoset enumerate_spherical_subsets(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<SubsetMask> found{0};
  std::unordered_set<SubsetMask> known{0};
  std::vector<SubsetMask> layer{0};
  while (!layer.empty()) {
    std::vector<SubsetMask> next;
    for (SubsetMask j : layer) {
      const std::size_t from = j == 0 ? 0 : 64 - std::countl_zero(j);
      for (std::size_t g = from; g < n; ++g) {
        const SubsetMask cand = j | (SubsetMask{1} << g);
        // every facet must already be spherical
        bool closed = true;
        for (std::size_t b : bits_of(cand)) {
          if (!known.count(cand & ~(SubsetMask{1} << b))) {
            closed = false;
            break;
          }
        }
        if (!closed || !finite_type(m, cand)) continue;
        known.insert(cand);
        next.push_back(cand);
        found.push_back(cand);
      }
    }
    layer = std::move(next);
  }
  return SphericalPoset(m, std::move(found));
}

GroupClass spherical_stabilizer(const CoxeterMatrix& m, SubsetMask j) {
  auto comps = finite_type(m, j);
  if (!comps) throw Error(ErrorKind::InvalidInput, subset_name(j) + " is not spherical", subset_name(j));
  const std::size_t k = static_cast<std::size_t>(std::popcount(j));
  bool right_angled = true;
  for (const auto& c : *comps) right_angled = right_angled && c.rank == 1;
  if (right_angled) return GroupClass::elem2(k);
  if (comps->size() == 1) {
    const auto& c = comps->front();
    if (c.rank == 2 && c.family == 'A') return GroupClass::dihedral_odd(3);
    if (c.family == 'I' && c.m % 2 == 1) return GroupClass::dihedral_odd(c.m);
  }
  throw Error(ErrorKind::UnsupportedStabilizer,
              "unsupported stabilizer: W" + subset_name(j) + " of type " + type_name(*comps), subset_name(j));
}

InclusionDescriptor spherical_inclusion(const CoxeterMatrix& m, SubsetMask i, SubsetMask j) {
  if ((i & ~j) != 0) {
    throw Error(ErrorKind::UnsupportedDescriptor, subset_name(i) + " is not contained in " + subset_name(j));
  }
  const GroupClass big = spherical_stabilizer(m, j);
  if (i == j) return InclusionDescriptor::identity(big);
  if (i == 0) return InclusionDescriptor::trivial_in(big);
  if (big.elem2_rank() >= 0) {
    const auto jb = bits_of(j);
    std::vector<std::size_t> inj;
    for (std::size_t b : bits_of(i)) inj.push_back(std::find(jb.begin(), jb.end(), b) - jb.begin());
    return InclusionDescriptor::elem2_subset(jb.size(), std::move(inj));
  }
  if (big.kind() == GroupClass::Kind::DihedralOdd && std::popcount(i) == 1) {
    return InclusionDescriptor::reflection_in_dihedral(big.parameter());
  }
  throw Error(ErrorKind::UnsupportedDescriptor,
              "no descriptor for W" + subset_name(i) + " <= W" + subset_name(j), subset_name(i) + " <= " + subset_name(j));
}

}  // namespace eqk
