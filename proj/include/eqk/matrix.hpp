#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqk {

using Integer = mpz_class;

/// Integer matrix with arbitrary-precision entries.
///
/// Storage is row-wise sparse (sorted column/value pairs, no explicit zeros):
/// the coboundary maps of order complexes are large and almost entirely zero.
/// Logically this is a dense rows x cols matrix; zero-sized shapes are legal
/// and behave as zero maps.
class IntMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;
  using Row = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Dense literal, e.g. `IntMatrix::from_rows({{2, 4}, {6, 8}})`.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static IntMatrix from_dense(std::size_t rows, std::size_t cols, const std::vector<Integer>& row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Integer& value);
  void add_to(std::size_t i, std::size_t j, const Integer& value);

  const Row& row(std::size_t i) const { return data_[i]; }
  /// Replaces row i; `entries` must be sorted by column and free of zeros.
  void set_row(std::size_t i, Row entries);

  std::size_t nonzeros() const;
  bool is_zero() const;

  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& factor) const;
  std::vector<Integer> dense() const;
  std::vector<std::vector<long>> to_long_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Matrix over the field with two elements, row-wise sparse (sorted column
/// indices of the ones).
class Mod2Matrix {
 public:
  using Row = std::vector<std::size_t>;

  Mod2Matrix() = default;
  Mod2Matrix(std::size_t rows, std::size_t cols);

  static Mod2Matrix identity(std::size_t n);
  static Mod2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  /// Entrywise reduction modulo 2.
  static Mod2Matrix reduce(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);
  void flip(std::size_t i, std::size_t j);

  const Row& row(std::size_t i) const { return data_[i]; }
  void set_row(std::size_t i, Row ones);

  std::size_t nonzeros() const;
  bool is_zero() const;

  Mod2Matrix transpose() const;
  /// 0/1 integer lift.
  IntMatrix lift() const;

  friend Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b);
  friend Mod2Matrix operator+(const Mod2Matrix& a, const Mod2Matrix& b);
  friend bool operator==(const Mod2Matrix& a, const Mod2Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

std::string to_string(const IntMatrix& m);

}  // namespace eqk
