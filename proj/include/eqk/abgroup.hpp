#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqk/matrix.hpp"

namespace eqk {

/// Finitely generated abelian group Z^rank (+) Z/d1 (+) ... (+) Z/dt with
/// d1 | d2 | ... | dt and every di >= 2. The form is canonical, so equality is
/// isomorphism.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::size_t free_rank) : free_rank_(free_rank) {}

  /// Accepts any list of cyclic orders: 0 means Z, 1 is dropped, the rest are
  /// normalized into a divisor chain.
  static AbGroup from_orders(const std::vector<Integer>& orders);
  static AbGroup from_orders(std::size_t free_rank, const std::vector<long>& torsion_orders);
  /// Z^free_rank (+) (Z/2)^twos
  static AbGroup free_and_two(std::size_t free_rank, std::size_t twos);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Number of even torsion factors, i.e. dim of G (x) Z/2 minus the free rank.
  std::size_t two_rank() const;
  /// Product of the torsion orders (1 for a free group).
  Integer torsion_order() const;
  /// Minimal number of generators.
  std::size_t generators() const { return free_rank_ + torsion_.size(); }

  friend AbGroup direct_sum(const AbGroup& a, const AbGroup& b);
  friend bool operator==(const AbGroup& a, const AbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const AbGroup& a, const AbGroup& b) { return !(a == b); }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// "0", "Z", "Z^3 (+) (Z/2)^2 (+) Z/6", ...
std::string to_string(const AbGroup& g);

}  // namespace eqk
