#include "eqk/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "eqk/error.hpp"

namespace eqk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::NotACochainComplex: return "not_a_cochain_complex";
    case ErrorKind::UnsupportedStabilizer: return "unsupported_stabilizer";
    case ErrorKind::UnsupportedDescriptor: return "unsupported_descriptor";
    case ErrorKind::NotKnownToCollapse: return "not_known_to_collapse";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

void check_index(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) {
  if (i >= rows || j >= cols) {
    throw Error(ErrorKind::InvalidInput, "matrix index out of range");
  }
}

}  // namespace

// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Integer(1));
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> copy;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    copy.emplace_back(r);
    cols = std::max(cols, r.size());
  }
  return from_rows(copy, cols);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0) m.data_[i].emplace_back(j, Integer(rows[i][j]));
    }
  }
  return m;
}

IntMatrix IntMatrix::from_dense(std::size_t rows, std::size_t cols, const std::vector<Integer>& row_major) {
  if (row_major.size() != rows * cols) throw Error(ErrorKind::InvalidInput, "dense data has wrong length");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer& v = row_major[i * cols + j];
      if (v != 0) m.data_[i].emplace_back(j, v);
    }
  }
  return m;
}

Integer IntMatrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j, rows_, cols_);
  const Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return 0;
}

void IntMatrix::set(std::size_t i, std::size_t j, const Integer& value) {
  check_index(i, j, rows_, cols_);
  Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (value == 0) {
      r.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    r.insert(it, Entry(j, value));
  }
}

void IntMatrix::add_to(std::size_t i, std::size_t j, const Integer& value) {
  if (value == 0) return;
  set(i, j, at(i, j) + value);
}

void IntMatrix::set_row(std::size_t i, Row entries) {
  check_index(i, 0, rows_, std::max<std::size_t>(cols_, 1));
  data_[i] = std::move(entries);
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  }
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  if (factor == 0) return IntMatrix(rows_, cols_);
  IntMatrix s = *this;
  for (auto& r : s.data_) {
    for (auto& e : r) e.second *= factor;
  }
  return s;
}

std::vector<Integer> IntMatrix::dense() const {
  std::vector<Integer> out(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) out[i * cols_ + j] = v;
  }
  return out;
}

std::vector<std::vector<long>> IntMatrix::to_long_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_, 0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) {
      if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "matrix entry does not fit a machine word");
      out[i][j] = v.get_si();
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  std::vector<Integer> acc(b.cols_);
  std::vector<char> used(b.cols_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (const auto& [k, av] : a.data_[i]) {
      for (const auto& [j, bv] : b.data_[k]) {
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = 0;
        }
        acc[j] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    IntMatrix::Row row;
    for (std::size_t j : touched) {
      if (acc[j] != 0) row.emplace_back(j, acc[j]);
      used[j] = 0;
    }
    c.data_[i] = std::move(row);
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidInput, "matrix sum shape mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& x = a.data_[i];
    const auto& y = b.data_[i];
    IntMatrix::Row out;
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
        out.push_back(x[p++]);
      } else if (p == x.size() || y[q].first < x[p].first) {
        out.push_back(y[q++]);
      } else {
        Integer s = x[p].second + y[q].second;
        if (s != 0) out.emplace_back(x[p].first, s);
        ++p;
        ++q;
      }
    }
    c.data_[i] = std::move(out);
  }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// Mod2Matrix

Mod2Matrix::Mod2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Mod2Matrix Mod2Matrix::identity(std::size_t n) {
  Mod2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(i);
  return m;
}

Mod2Matrix Mod2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  Mod2Matrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    std::size_t j = 0;
    for (int v : r) {
      if (v % 2 != 0) m.data_[i].push_back(j);
      ++j;
    }
    ++i;
  }
  return m;
}

Mod2Matrix Mod2Matrix::reduce(const IntMatrix& m) {
  Mod2Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) {
      if (mpz_odd_p(v.get_mpz_t())) out.data_[i].push_back(j);
    }
  }
  return out;
}

bool Mod2Matrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j, rows_, cols_);
  return std::binary_search(data_[i].begin(), data_[i].end(), j);
}

void Mod2Matrix::set(std::size_t i, std::size_t j, bool value) {
  if (at(i, j) != value) flip(i, j);
}

void Mod2Matrix::flip(std::size_t i, std::size_t j) {
  check_index(i, j, rows_, cols_);
  Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j);
  if (it != r.end() && *it == j) {
    r.erase(it);
  } else {
    r.insert(it, j);
  }
}

void Mod2Matrix::set_row(std::size_t i, Row ones) {
  check_index(i, 0, rows_, std::max<std::size_t>(cols_, 1));
  data_[i] = std::move(ones);
}

std::size_t Mod2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool Mod2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

Mod2Matrix Mod2Matrix::transpose() const {
  Mod2Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j : data_[i]) t.data_[j].push_back(i);
  }
  return t;
}

IntMatrix Mod2Matrix::lift() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    IntMatrix::Row r;
    r.reserve(data_[i].size());
    for (std::size_t j : data_[i]) r.emplace_back(j, Integer(1));
    out.set_row(i, std::move(r));
  }
  return out;
}

Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix product shape mismatch");
  Mod2Matrix c(a.rows_, b.cols_);
  std::vector<char> parity(b.cols_, 0);
  std::vector<char> seen(b.cols_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (std::size_t k : a.data_[i]) {
      for (std::size_t j : b.data_[k]) {
        if (!seen[j]) {
          seen[j] = 1;
          touched.push_back(j);
        }
        parity[j] ^= 1;
      }
    }
    std::sort(touched.begin(), touched.end());
    Mod2Matrix::Row row;
    for (std::size_t j : touched) {
      if (parity[j]) row.push_back(j);
      parity[j] = 0;
      seen[j] = 0;
    }
    c.data_[i] = std::move(row);
  }
  return c;
}

Mod2Matrix operator+(const Mod2Matrix& a, const Mod2Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidInput, "matrix sum shape mismatch");
  Mod2Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Mod2Matrix::Row out;
    std::set_symmetric_difference(a.data_[i].begin(), a.data_[i].end(), b.data_[i].begin(), b.data_[i].end(),
                                  std::back_inserter(out));
    c.data_[i] = std::move(out);
  }
  return c;
}

bool operator==(const Mod2Matrix& a, const Mod2Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace eqk
