#include "eqk/group_class.hpp"

#include <algorithm>
#include <set>

#include "eqk/error.hpp"

namespace eqk {

GroupClass GroupClass::cyclic(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  if (m == 1) return trivial();
  return GroupClass(Kind::Cyclic, m);
}

GroupClass GroupClass::elem2(std::uint64_t k) {
  if (k >= 63) throw Error(ErrorKind::InvalidInput, "elementary abelian 2-group too large");
  if (k == 0) return trivial();
  if (k == 1) return cyclic(2);
  return GroupClass(Kind::Elem2, k);
}

GroupClass GroupClass::dihedral_odd(std::uint64_t m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorKind::InvalidInput, "odd dihedral group needs odd m >= 3");
  return GroupClass(Kind::DihedralOdd, m);
}

std::uint64_t GroupClass::order() const {
  switch (kind_) {
    case Kind::Trivial: return 1;
    case Kind::Cyclic: return param_;
    case Kind::Elem2: return std::uint64_t{1} << param_;
    case Kind::DihedralOdd: return 2 * param_;
  }
  return 1;
}

int GroupClass::elem2_rank() const {
  switch (kind_) {
    case Kind::Trivial: return 0;
    case Kind::Cyclic: return param_ == 2 ? 1 : -1;
    case Kind::Elem2: return static_cast<int>(param_);
    case Kind::DihedralOdd: return -1;
  }
  return -1;
}

std::string GroupClass::name() const {
  switch (kind_) {
    case Kind::Trivial: return "1";
    case Kind::Cyclic: return "Z/" + std::to_string(param_);
    case Kind::Elem2: return "(Z/2)^" + std::to_string(param_);
    case Kind::DihedralOdd: return "D" + std::to_string(param_);
  }
  return "?";
}

InclusionDescriptor InclusionDescriptor::identity(const GroupClass& g) {
  InclusionDescriptor d;
  d.kind = Kind::Identity;
  d.sub = g;
  d.big = g;
  return d;
}

InclusionDescriptor InclusionDescriptor::trivial_in(const GroupClass& big) {
  InclusionDescriptor d;
  d.kind = Kind::TrivialInAnything;
  d.big = big;
  return d;
}

InclusionDescriptor InclusionDescriptor::cyclic_in_cyclic(std::uint64_t r, std::uint64_t m) {
  if (r == 0 || m == 0) throw Error(ErrorKind::UnsupportedDescriptor, "cyclic orders must be positive");
  InclusionDescriptor d;
  d.kind = Kind::CyclicInCyclic;
  d.sub = GroupClass::cyclic(r);
  d.big = GroupClass::cyclic(r * m);
  return d;
}

InclusionDescriptor InclusionDescriptor::elem2_subset(std::size_t big_rank, std::vector<std::size_t> injection) {
  InclusionDescriptor d;
  d.kind = Kind::Elem2Subset;
  d.sub = GroupClass::elem2(injection.size());
  d.big = GroupClass::elem2(big_rank);
  d.injection = std::move(injection);
  d.validate();
  return d;
}

InclusionDescriptor InclusionDescriptor::reflection_in_dihedral(std::uint64_t m) {
  InclusionDescriptor d;
  d.kind = Kind::ReflectionInDihedral;
  d.sub = GroupClass::cyclic(2);
  d.big = GroupClass::dihedral_odd(m);
  return d;
}

InclusionDescriptor InclusionDescriptor::rotation_in_dihedral(std::uint64_t m) {
  InclusionDescriptor d;
  d.kind = Kind::RotationInDihedral;
  d.sub = GroupClass::cyclic(m);
  d.big = GroupClass::dihedral_odd(m);
  return d;
}

void InclusionDescriptor::validate() const {
  auto fail = [this](const std::string& why) {
    throw Error(ErrorKind::UnsupportedDescriptor, why + ": " + name(), name());
  };
  using GK = GroupClass::Kind;
  switch (kind) {
    case Kind::Identity:
      if (sub != big) fail("identity between different groups");
      break;
    case Kind::TrivialInAnything:
      if (sub.kind() != GK::Trivial) fail("subgroup is not trivial");
      break;
    case Kind::CyclicInCyclic: {
      const bool sub_ok = sub.kind() == GK::Trivial || sub.kind() == GK::Cyclic;
      const bool big_ok = big.kind() == GK::Trivial || big.kind() == GK::Cyclic;
      if (!sub_ok || !big_ok || big.order() % sub.order() != 0) fail("not a cyclic tower");
      break;
    }
    case Kind::Elem2Subset: {
      const int ks = sub.elem2_rank();
      const int kb = big.elem2_rank();
      if (ks < 0 || kb < 0 || static_cast<std::size_t>(ks) != injection.size()) fail("bad elementary abelian pair");
      std::set<std::size_t> seen;
      for (std::size_t x : injection) {
        if (x >= static_cast<std::size_t>(kb) || !seen.insert(x).second) fail("coordinate map is not injective");
      }
      break;
    }
    case Kind::ReflectionInDihedral:
      if (sub != GroupClass::cyclic(2) || big.kind() != GK::DihedralOdd) fail("not a reflection subgroup");
      break;
    case Kind::RotationInDihedral:
      if (big.kind() != GK::DihedralOdd || sub != GroupClass::cyclic(big.parameter())) {
        fail("not the rotation subgroup");
      }
      break;
  }
}

const char* to_string(InclusionDescriptor::Kind kind) {
  using K = InclusionDescriptor::Kind;
  switch (kind) {
    case K::Identity: return "identity";
    case K::TrivialInAnything: return "trivial_in_anything";
    case K::CyclicInCyclic: return "cyclic_in_cyclic";
    case K::Elem2Subset: return "elem2_subset";
    case K::ReflectionInDihedral: return "reflection_in_dihedral";
    case K::RotationInDihedral: return "rotation_in_dihedral";
  }
  return "?";
}

InclusionDescriptor::Kind descriptor_kind_from_string(const std::string& s) {
  using K = InclusionDescriptor::Kind;
  for (K k : {K::Identity, K::TrivialInAnything, K::CyclicInCyclic, K::Elem2Subset, K::ReflectionInDihedral,
              K::RotationInDihedral}) {
    if (s == to_string(k)) return k;
  }
  throw Error(ErrorKind::InvalidInput, "unknown inclusion kind '" + s + "'", s);
}

std::string InclusionDescriptor::name() const {
  std::string out = sub.name() + " <= " + big.name();
  switch (kind) {
    case Kind::Identity: out += " (identity)"; break;
    case Kind::TrivialInAnything: break;
    case Kind::CyclicInCyclic: break;
    case Kind::Elem2Subset: {
      out += " via [";
      for (std::size_t i = 0; i < injection.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(injection[i]);
      }
      out += "]";
      break;
    }
    case Kind::ReflectionInDihedral: out += " (reflection)"; break;
    case Kind::RotationInDihedral: out += " (rotations)"; break;
  }
  return out;
}

}  // namespace eqk
