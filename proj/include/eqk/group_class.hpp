#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eqk {

/// A finite group from the supported catalogue. Construct through the
/// factories, which canonicalize: Cyclic(1) and Elem2(0) become Trivial,
/// Elem2(1) becomes Cyclic(2).
class GroupClass {
 public:
  enum class Kind { Trivial, Cyclic, Elem2, DihedralOdd };

  GroupClass() = default;

  static GroupClass trivial() { return GroupClass(); }
  static GroupClass cyclic(std::uint64_t m);
  static GroupClass elem2(std::uint64_t k);
  /// Dihedral group of order 2m, m odd and at least 3.
  static GroupClass dihedral_odd(std::uint64_t m);

  Kind kind() const { return kind_; }
  /// m for Cyclic and DihedralOdd, k for Elem2, 1 for Trivial.
  std::uint64_t parameter() const { return param_; }
  std::uint64_t order() const;
  /// Rank as an elementary abelian 2-group: 0 for Trivial, 1 for Cyclic(2),
  /// k for Elem2(k); -1 otherwise.
  int elem2_rank() const;

  std::string name() const;

  friend auto operator<=>(const GroupClass&, const GroupClass&) = default;
  friend bool operator==(const GroupClass&, const GroupClass&) = default;

 private:
  GroupClass(Kind kind, std::uint64_t param) : kind_(kind), param_(param) {}
  Kind kind_ = Kind::Trivial;
  std::uint64_t param_ = 1;
};

/// Symbolic inclusion sub <= big, determined up to conjugacy.
struct InclusionDescriptor {
  enum class Kind {
    Identity,
    TrivialInAnything,
    CyclicInCyclic,
    Elem2Subset,
    ReflectionInDihedral,
    RotationInDihedral,
  };

  Kind kind = Kind::Identity;
  GroupClass sub;
  GroupClass big;
  /// Elem2Subset only: coordinate i of sub goes to coordinate injection[i] of big.
  std::vector<std::size_t> injection;

  static InclusionDescriptor identity(const GroupClass& g);
  static InclusionDescriptor trivial_in(const GroupClass& big);
  /// Z/r <= Z/(m r); r = 1 gives the trivial subgroup.
  static InclusionDescriptor cyclic_in_cyclic(std::uint64_t r, std::uint64_t m);
  static InclusionDescriptor elem2_subset(std::size_t big_rank, std::vector<std::size_t> injection);
  static InclusionDescriptor reflection_in_dihedral(std::uint64_t m);
  static InclusionDescriptor rotation_in_dihedral(std::uint64_t m);

  /// Throws UnsupportedDescriptor when the fields are inconsistent.
  void validate() const;
  std::string name() const;

  friend auto operator<=>(const InclusionDescriptor&, const InclusionDescriptor&) = default;
  friend bool operator==(const InclusionDescriptor&, const InclusionDescriptor&) = default;
};

const char* to_string(InclusionDescriptor::Kind kind);
InclusionDescriptor::Kind descriptor_kind_from_string(const std::string& s);

}  // namespace eqk
