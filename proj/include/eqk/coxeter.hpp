#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqk/group_class.hpp"

namespace eqk {

using SubsetMask = std::uint64_t;

/// Symmetric Coxeter matrix; 0 stands for infinity.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Validates symmetry, unit diagonal and off-diagonal entries >= 2 or 0.
  explicit CoxeterMatrix(std::vector<std::vector<std::uint64_t>> m);

  std::size_t size() const { return m_.size(); }
  std::uint64_t at(std::size_t i, std::size_t j) const { return m_.at(i).at(j); }
  bool infinite(std::size_t i, std::size_t j) const { return i != j && m_[i][j] == 0; }
  bool is_right_angled() const;
  const std::vector<std::vector<std::uint64_t>>& entries() const { return m_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<std::uint64_t>> m_;
};

/// One irreducible finite Coxeter type, e.g. A3, B2, I2(5), E8.
struct FiniteComponent {
  char family = 'A';   // A B D E F H I
  std::size_t rank = 0;
  std::uint64_t m = 0;  // only for I
  std::vector<std::size_t> generators;
  std::string name() const;
};

/// Decomposition of W_J into irreducible finite types, or nothing when W_J
/// is infinite.
std::optional<std::vector<FiniteComponent>> finite_type(const CoxeterMatrix& m, SubsetMask j);
std::string type_name(const std::vector<FiniteComponent>& components);

/// "{s0,s2}", "{}"
std::string subset_name(SubsetMask j);

/// Spherical subsets ordered by (size, mask); always contains the empty set.
class SphericalPoset {
 public:
  SphericalPoset(const CoxeterMatrix& m, std::vector<SubsetMask> elements);

  const CoxeterMatrix& matrix() const { return m_; }
  const std::vector<SubsetMask>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(SubsetMask j) const;
  std::size_t index_of(SubsetMask j) const;

 private:
  CoxeterMatrix m_;
  std::vector<SubsetMask> elements_;
};

SphericalPoset enumerate_spherical_subsets(const CoxeterMatrix& m);

/// W_J in the supported catalogue; UnsupportedStabilizer otherwise, naming J.
GroupClass spherical_stabilizer(const CoxeterMatrix& m, SubsetMask j);
/// W_I <= W_J for spherical I contained in J.
InclusionDescriptor spherical_inclusion(const CoxeterMatrix& m, SubsetMask i, SubsetMask j);

}  // namespace eqk
