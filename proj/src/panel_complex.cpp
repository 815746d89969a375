#include "eqk/panel_complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "eqk/error.hpp"

namespace eqk {

namespace {

bool proper_subset(SubsetMask a, SubsetMask b) { return a != b && (a & ~b) == 0; }

struct Builder {
  PanelComplex b;

  std::size_t add(std::size_t dim, SubsetMask panel, std::vector<std::pair<std::size_t, long>> boundary) {
    if (b.cells.size() <= dim) b.cells.resize(dim + 1);
    std::sort(boundary.begin(), boundary.end());
    std::size_t same = 0;
    for (const auto& c : b.cells[dim]) same += c.panel == panel;
    static const char* kDimNames = "vefc";
    std::string label = "B" + subset_name(panel) + "/" + std::string(1, kDimNames[std::min<std::size_t>(dim, 3)]);
    if (dim >= 3) label += std::to_string(dim);
    label += std::to_string(same);
    b.cells[dim].push_back({label, panel, std::move(boundary)});
    return b.cells[dim].size() - 1;
  }

  // Reverses the orientation of edge e everywhere.
  void flip_edge(std::size_t e) {
    for (auto& [v, c] : b.cells[1][e].boundary) c = -c;
    if (b.cells.size() > 2) {
      for (auto& f : b.cells[2]) {
        for (auto& [x, c] : f.boundary) {
          if (x == e) c = -c;
        }
      }
    }
  }

  std::size_t head(std::size_t e) const {
    for (const auto& [v, c] : b.cells[1][e].boundary) {
      if (c > 0) return v;
    }
    throw Error(ErrorKind::InvalidInput, "edge without a head");
  }
  std::size_t other_end(std::size_t e, std::size_t v) const {
    for (const auto& [w, c] : b.cells[1][e].boundary) {
      if (w != v) return w;
    }
    return v;
  }

  void cone(SubsetMask j, const std::vector<std::pair<std::size_t, std::size_t>>& u) {
    const std::size_t apex = add(0, j, {});
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> coned;
    // u is sorted by dimension, so faces are coned before the cells on them
    for (const auto& [dim, idx] : u) {
      std::vector<std::pair<std::size_t, long>> bd;
      if (dim == 0) {
        bd = {{idx, 1}, {apex, -1}};
      } else {
        bd.emplace_back(idx, 1);
        for (const auto& [face, c] : b.cells[dim][idx].boundary) bd.emplace_back(coned.at({dim - 1, face}), -c);
      }
      coned[{dim, idx}] = add(dim + 1, j, std::move(bd));
    }
  }

  void fill_graph(SubsetMask j, const std::vector<std::size_t>& verts, std::vector<std::size_t> edges) {
    std::map<std::size_t, std::vector<std::size_t>> incident;
    for (std::size_t v : verts) incident[v];
    for (std::size_t e : edges) {
      for (const auto& [v, c] : b.cells[1][e].boundary) incident[v].push_back(e);
    }
    // components, keyed by their lowest vertex
    std::map<std::size_t, std::size_t> comp_of;
    std::vector<std::size_t> roots;
    for (std::size_t v : verts) {
      if (comp_of.count(v)) continue;
      roots.push_back(v);
      std::vector<std::size_t> stack{v};
      comp_of[v] = v;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t e : incident[x]) {
          const std::size_t y = other_end(e, x);
          if (!comp_of.count(y)) {
            comp_of[y] = v;
            stack.push_back(y);
          }
        }
      }
    }
    const std::size_t cyclomatic = edges.size() + roots.size() - verts.size();
    if (roots.size() == 1 && cyclomatic == 0) return;  // already a tree

    bool single_cycle = roots.size() == 1 && cyclomatic == 1;
    for (std::size_t v : verts) single_cycle = single_cycle && incident[v].size() == 2;
    if (single_cycle) {
      // walk from the lowest vertex towards its higher neighbour, orienting
      // every edge along the walk
      const std::size_t start = verts.front();
      std::size_t e = incident[start][0];
      if (other_end(incident[start][1], start) > other_end(e, start)) e = incident[start][1];
      std::size_t cur = start;
      std::vector<std::pair<std::size_t, long>> disk;
      do {
        const std::size_t next = other_end(e, cur);
        if (head(e) != next) flip_edge(e);
        disk.emplace_back(e, 1);
        cur = next;
        e = incident[cur][0] == e ? incident[cur][1] : incident[cur][0];
      } while (cur != start);
      add(2, j, std::move(disk));
      return;
    }

    for (std::size_t c = 1; c < roots.size(); ++c) {
      const std::size_t lo = std::min(roots[0], roots[c]);
      const std::size_t hi = std::max(roots[0], roots[c]);
      const std::size_t e = add(1, j, {{hi, 1}, {lo, -1}});
      edges.push_back(e);
      incident[lo].push_back(e);
      incident[hi].push_back(e);
    }
    // spanning tree by breadth-first search, then one disk per remaining edge
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> parent;  // vertex -> (parent vertex, edge)
    std::map<std::size_t, std::size_t> depth;
    std::vector<char> in_tree(b.cells[1].size(), 0);
    std::vector<std::size_t> queue{verts.front()};
    depth[verts.front()] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t x = queue[qi];
      std::vector<std::size_t> inc = incident[x];
      std::sort(inc.begin(), inc.end());
      for (std::size_t e : inc) {
        const std::size_t y = other_end(e, x);
        if (depth.count(y)) continue;
        depth[y] = depth[x] + 1;
        parent[y] = {x, e};
        in_tree[e] = 1;
        queue.push_back(y);
      }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t e : edges) {
      if (in_tree[e]) continue;
      // e runs tail -> head; close the loop along the tree from head to tail
      const std::size_t h = head(e);
      const std::size_t t = other_end(e, h);
      std::map<std::size_t, long> disk{{e, 1}};
      auto step = [&](std::size_t to, std::size_t edge) { disk[edge] += head(edge) == to ? 1 : -1; };
      std::size_t x = h, y = t;
      std::vector<std::pair<std::size_t, std::size_t>> tail_part;  // climbed from t, replayed backwards
      while (x != y) {
        if (depth[x] >= depth[y]) {
          auto [px, ex] = parent[x];
          step(px, ex);
          x = px;
        } else {
          auto [py, ey] = parent[y];
          tail_part.emplace_back(py, ey);
          y = py;
        }
      }
      for (auto it = tail_part.rbegin(); it != tail_part.rend(); ++it) {
        // walking down from the common ancestor towards t
        const std::size_t edge = it->second;
        const std::size_t to = other_end(edge, it->first);
        step(to, edge);
      }
      std::vector<std::pair<std::size_t, long>> bd;
      for (const auto& [edge, c] : disk) {
        if (c != 0) bd.emplace_back(edge, c);
      }
      add(2, j, std::move(bd));
    }
  }
};

}  // namespace

std::size_t PanelComplex::cell_count() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  return n;
}

IntMatrix PanelComplex::boundary_matrix(std::size_t p) const {
  if (p == 0 || p >= cells.size()) throw Error(ErrorKind::InvalidInput, "boundary degree out of range");
  IntMatrix m(cells[p - 1].size(), cells[p].size());
  for (std::size_t k = 0; k < cells[p].size(); ++k) {
    for (const auto& [f, c] : cells[p][k].boundary) m.add_to(f, k, c);
  }
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> PanelComplex::panel(SubsetMask j) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t d = 0; d < cells.size(); ++d) {
    for (std::size_t i = 0; i < cells[d].size(); ++i) {
      if ((j & ~cells[d][i].panel) == 0) out.emplace_back(d, i);
    }
  }
  return out;
}

long PanelComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < cells.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(cells[d].size());
  return chi;
}

PanelComplex build_bestvina_complex(const SphericalPoset& q) {
  std::vector<SubsetMask> order = q.elements();
  std::sort(order.begin(), order.end(), [](SubsetMask a, SubsetMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  Builder bl;
  for (SubsetMask j : order) {
    std::vector<SubsetMask> uppers;
    for (SubsetMask i : q.elements()) {
      if (proper_subset(j, i)) uppers.push_back(i);
    }
    if (uppers.empty()) {
      bl.add(0, j, {});
      continue;
    }
    std::size_t minimal = 0;
    for (SubsetMask i : uppers) {
      bool is_min = true;
      for (SubsetMask k : uppers) is_min = is_min && !proper_subset(k, i);
      minimal += is_min;
    }
    if (minimal == 1) continue;  // the union is one panel, contractible already

    std::vector<std::pair<std::size_t, std::size_t>> u;
    for (std::size_t d = 0; d < bl.b.cells.size(); ++d) {
      for (std::size_t i = 0; i < bl.b.cells[d].size(); ++i) {
        if (proper_subset(j, bl.b.cells[d][i].panel)) u.emplace_back(d, i);
      }
    }
    std::size_t top = 0;
    for (const auto& c : u) top = std::max(top, c.first);
    if (top >= 2) {
      bl.cone(j, u);
      continue;
    }
    std::vector<std::size_t> verts, edges;
    for (const auto& [d, i] : u) (d == 0 ? verts : edges).push_back(i);
    bl.fill_graph(j, verts, edges);
  }
  if (bl.b.cells.empty()) bl.b.cells.resize(1);
  return std::move(bl.b);
}

OrbitComplex orbit_complex_from_panel(const PanelComplex& b, const SphericalPoset& q) {
  const CoxeterMatrix& m = q.matrix();
  std::map<SubsetMask, GroupClass> stab;
  auto stabilizer = [&](SubsetMask j) {
    auto it = stab.find(j);
    if (it == stab.end()) it = stab.emplace(j, spherical_stabilizer(m, j)).first;
    return it->second;
  };
  std::vector<std::vector<Cell>> cells(b.cells.size());
  std::vector<std::vector<Incidence>> inc(b.cells.size());
  for (std::size_t d = 0; d < b.cells.size(); ++d) {
    for (std::size_t k = 0; k < b.cells[d].size(); ++k) {
      const auto& pc = b.cells[d][k];
      cells[d].push_back({pc.label, stabilizer(pc.panel)});
      for (const auto& [f, c] : pc.boundary) {
        const SubsetMask fp = b.cells[d - 1][f].panel;
        inc[d].push_back({k, f, c, spherical_inclusion(m, pc.panel, fp)});
      }
    }
  }
  return OrbitComplex(std::move(cells), std::move(inc));
}

OrbitComplex build_davis_orbit_complex(const SphericalPoset& q) {
  const auto& els = q.elements();
  const CoxeterMatrix& m = q.matrix();
  const std::size_t n = els.size();
  std::vector<std::vector<std::uint32_t>> up(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (proper_subset(els[a], els[b])) up[a].push_back(static_cast<std::uint32_t>(b));
    }
  }
  std::vector<GroupClass> stab;
  stab.reserve(n);
  for (SubsetMask j : els) stab.push_back(spherical_stabilizer(m, j));

  using Chain = std::vector<std::uint32_t>;
  std::vector<std::vector<Chain>> chains;
  std::function<void(Chain&)> extend = [&](Chain& c) {
    const std::size_t d = c.size() - 1;
    if (chains.size() <= d) chains.resize(d + 1);
    chains[d].push_back(c);
    for (std::uint32_t nb : up[c.back()]) {
      c.push_back(nb);
      extend(c);
      c.pop_back();
    }
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    Chain c{a};
    extend(c);
  }
  for (auto& level : chains) std::sort(level.begin(), level.end());

  std::vector<std::vector<Cell>> cells(chains.size());
  std::vector<std::vector<Incidence>> inc(chains.size());
  std::map<std::pair<std::uint32_t, std::uint32_t>, InclusionDescriptor> desc;
  for (std::size_t d = 0; d < chains.size(); ++d) {
    for (std::size_t k = 0; k < chains[d].size(); ++k) {
      const Chain& c = chains[d][k];
      std::string label;
      for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "<" : "") + subset_name(els[c[i]]);
      cells[d].push_back({label, stab[c[0]]});
      if (d == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) {
        Chain face = c;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto it = std::lower_bound(chains[d - 1].begin(), chains[d - 1].end(), face);
        const std::size_t f = static_cast<std::size_t>(it - chains[d - 1].begin());
        InclusionDescriptor di;
        if (i == 0) {
          auto key = std::make_pair(c[0], c[1]);
          auto found = desc.find(key);
          if (found == desc.end()) found = desc.emplace(key, spherical_inclusion(m, els[c[0]], els[c[1]])).first;
          di = found->second;
        } else {
          di = InclusionDescriptor::identity(stab[c[0]]);
        }
        inc[d].push_back({k, f, (i % 2 == 0) ? 1L : -1L, std::move(di)});
      }
    }
  }
  return OrbitComplex(std::move(cells), std::move(inc));
}

}  // namespace eqk
