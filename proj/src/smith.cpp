#include "eqk/smith.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace eqk {

namespace {

using Dense = std::vector<std::vector<Integer>>;

// Dense working state. When `track` is false only the diagonal is wanted and
// the transforms are skipped.
struct Reducer {
  Dense a, u, v;
  std::size_t r = 0, c = 0;
  bool track = true;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (track) {
      for (auto& row : v) std::swap(row[i], row[j]);
    }
  }
  // row dst += q * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < c; ++j) {
      if (a[src][j] != 0) a[dst][j] += q * a[src][j];
    }
    if (track) {
      for (std::size_t j = 0; j < r; ++j) {
        if (u[src][j] != 0) u[dst][j] += q * u[src][j];
      }
    }
  }
  // col dst += q * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][src] != 0) a[i][dst] += q * a[i][src];
    }
    if (track) {
      for (std::size_t i = 0; i < c; ++i) {
        if (v[i][src] != 0) v[i][dst] += q * v[i][src];
      }
    }
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    if (track) {
      for (auto& x : u[i]) x = -x;
    }
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < c; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || mpz_cmpabs(a[i][j].get_mpz_t(), best.get_mpz_t()) < 0) {
          found = true;
          best = a[i][j];
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  void run() {
    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        Integer q;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (a[i][t] == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
          add_row(i, t, -q);
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a[t][j] == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
          add_col(j, t, -q);
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) {
          find_pivot(t, pi, pj);
          swap_rows(t, pi);
          swap_cols(t, pj);
          continue;
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < r && divides; ++i) {
          for (std::size_t j = t + 1; j < c; ++j) {
            if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a[t][t] < 0) negate_row(t);
    }
  }
};

Dense to_dense(const IntMatrix& m) {
  Dense d(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, x] : m.row(i)) d[i][j] = x;
  }
  return d;
}

Dense dense_identity(std::size_t n) {
  Dense d(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

IntMatrix from_dense_rows(const Dense& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    IntMatrix::Row row;
    for (std::size_t j = 0; j < cols; ++j) {
      if (d[i][j] != 0) row.emplace_back(j, d[i][j]);
    }
    m.set_row(i, std::move(row));
  }
  return m;
}

std::vector<Integer> dense_factors(Dense a, std::size_t rows, std::size_t cols) {
  Reducer red;
  red.a = std::move(a);
  red.r = rows;
  red.c = cols;
  red.track = false;
  red.run();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (red.a[t][t] == 0) break;
    out.push_back(red.a[t][t]);
  }
  return out;
}

using MinHeap = std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                                    std::greater<>>;

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer red;
  red.a = to_dense(m);
  red.u = dense_identity(m.rows());
  red.v = dense_identity(m.cols());
  red.r = m.rows();
  red.c = m.cols();
  red.run();
  return {from_dense_rows(red.u, m.rows(), m.rows()), from_dense_rows(red.a, m.rows(), m.cols()),
          from_dense_rows(red.v, m.cols(), m.cols())};
}

RankProfile elimination_profile(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  std::vector<IntMatrix::Row> rows(nr);
  std::vector<std::vector<std::size_t>> col_rows(m.cols());
  for (std::size_t i = 0; i < nr; ++i) {
    rows[i] = m.row(i);
    for (const auto& e : rows[i]) col_rows[e.first].push_back(i);
  }
  std::vector<char> alive(nr, 1);
  MinHeap heap;
  for (std::size_t i = 0; i < nr; ++i) heap.emplace(rows[i].size(), i);

  RankProfile out;
  auto entry_in = [](const IntMatrix::Row& row, std::size_t col) -> const Integer* {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const IntMatrix::Entry& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
  };

  while (!heap.empty()) {
    auto [len, i] = heap.top();
    heap.pop();
    if (!alive[i] || len != rows[i].size()) continue;
    if (len == 0) {
      alive[i] = 0;
      continue;
    }
    std::size_t col = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    bool unit = false;
    for (const auto& [j, x] : rows[i]) {
      if (x != 1 && x != -1) continue;
      if (col_rows[j].size() < best) {
        best = col_rows[j].size();
        col = j;
        unit = true;
      }
    }
    if (!unit) continue;  // parked until an update touches it

    const IntMatrix::Row pivot = rows[i];
    const Integer u = *entry_in(pivot, col);
    alive[i] = 0;
    for (std::size_t k : col_rows[col]) {
      if (k == i || !alive[k]) continue;
      const Integer* hit = entry_in(rows[k], col);
      if (hit == nullptr) continue;
      const Integer f = *hit * u;
      IntMatrix::Row merged;
      merged.reserve(rows[k].size() + pivot.size());
      const auto& x = rows[k];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < pivot.size()) {
        if (q == pivot.size() || (p < x.size() && x[p].first < pivot[q].first)) {
          merged.push_back(x[p++]);
        } else if (p == x.size() || pivot[q].first < x[p].first) {
          merged.emplace_back(pivot[q].first, -f * pivot[q].second);
          col_rows[pivot[q].first].push_back(k);
          ++q;
        } else {
          Integer s = x[p].second - f * pivot[q].second;
          if (s != 0) merged.emplace_back(x[p].first, std::move(s));
          ++p;
          ++q;
        }
      }
      rows[k] = std::move(merged);
      heap.emplace(rows[k].size(), k);
    }
    col_rows[col].clear();
    ++out.rank;
    out.factors.emplace_back(1);
  }

  // Whatever is still alive had no unit entry: finish densely.
  std::vector<std::size_t> left_rows;
  std::vector<std::size_t> col_map(m.cols(), static_cast<std::size_t>(-1));
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < nr; ++i) {
    if (!alive[i] || rows[i].empty()) continue;
    left_rows.push_back(i);
    for (const auto& e : rows[i]) {
      if (col_map[e.first] == static_cast<std::size_t>(-1)) col_map[e.first] = ncols++;
    }
  }
  if (!left_rows.empty()) {
    Dense d(left_rows.size(), std::vector<Integer>(ncols));
    for (std::size_t a = 0; a < left_rows.size(); ++a) {
      for (const auto& [j, x] : rows[left_rows[a]]) d[a][col_map[j]] = x;
    }
    for (auto& f : dense_factors(std::move(d), left_rows.size(), ncols)) {
      ++out.rank;
      out.factors.push_back(std::move(f));
    }
  }
  return out;
}

std::size_t rank_mod2(const Mod2Matrix& m) {
  const std::size_t nr = m.rows();
  std::vector<Mod2Matrix::Row> rows(nr);
  std::vector<std::vector<std::size_t>> col_rows(m.cols());
  for (std::size_t i = 0; i < nr; ++i) {
    rows[i] = m.row(i);
    for (std::size_t j : rows[i]) col_rows[j].push_back(i);
  }
  std::vector<char> alive(nr, 1);
  MinHeap heap;
  for (std::size_t i = 0; i < nr; ++i) heap.emplace(rows[i].size(), i);

  std::size_t rank = 0;
  while (!heap.empty()) {
    auto [len, i] = heap.top();
    heap.pop();
    if (!alive[i] || len != rows[i].size()) continue;
    alive[i] = 0;
    if (len == 0) continue;
    std::size_t col = rows[i].front();
    for (std::size_t j : rows[i]) {
      if (col_rows[j].size() < col_rows[col].size()) col = j;
    }
    const Mod2Matrix::Row pivot = rows[i];
    for (std::size_t k : col_rows[col]) {
      if (k == i || !alive[k]) continue;
      if (!std::binary_search(rows[k].begin(), rows[k].end(), col)) continue;
      Mod2Matrix::Row merged;
      merged.reserve(rows[k].size() + pivot.size());
      std::set_symmetric_difference(rows[k].begin(), rows[k].end(), pivot.begin(), pivot.end(),
                                    std::back_inserter(merged));
      for (std::size_t j : pivot) {
        if (!std::binary_search(rows[k].begin(), rows[k].end(), j)) col_rows[j].push_back(k);
      }
      rows[k] = std::move(merged);
      heap.emplace(rows[k].size(), k);
    }
    col_rows[col].clear();
    ++rank;
  }
  return rank;
}

}  // namespace eqk
