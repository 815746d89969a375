#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqk/abgroup.hpp"
#include "eqk/ahss.hpp"
#include "eqk/amalgam.hpp"
#include "eqk/bredon.hpp"
#include "eqk/coxeter.hpp"

namespace eqk {

/// One degree of a closed-form answer: either a group, or an unresolved
/// extension known only through its pieces.
struct ClosedFormEntry {
  int degree = 0;
  std::optional<AbGroup> group;
  std::vector<AbGroup> extension_of;
  std::string formula;

  bool is_extension() const { return !group.has_value(); }
};

struct ClosedForm {
  Theory theory = Theory::K;
  std::string family;
  /// Named integer parameters (sigma, d, n, ...), in evaluation order.
  std::vector<std::pair<std::string, long>> parameters;
  std::vector<ClosedFormEntry> degrees;  // degree 0, -1, ..., 1 - period

  const ClosedFormEntry& at(int degree) const;
};

ClosedForm closed_form_amalgam(const AmalgamSpec& spec, Theory theory);
ClosedForm closed_form_right_angled(const CoxeterMatrix& m, Theory theory);
/// n + 1 generators s0..sn with m(s_i, s_{i+1}) = 3, all other pairs infinite.
ClosedForm closed_form_path(std::size_t n, Theory theory);
/// As the path, plus m(s0, sn) = 3.
ClosedForm closed_form_polygon(std::size_t n, Theory theory);

/// Number of cliques (including the empty one) of the graph joining i, j
/// when m_ij = 2.
std::size_t count_commuting_cliques(const CoxeterMatrix& m);

enum class CoxeterFamily { RightAngled, Path, Polygon, None };
std::string to_string(CoxeterFamily f);

/// Detects the families with a closed form; `n` receives the family
/// parameter (generator count minus one for Path and Polygon).
CoxeterFamily detect_family(const CoxeterMatrix& m, std::size_t* n = nullptr);
/// Closed form for any detected family; nothing for None.
std::optional<ClosedForm> closed_form_coxeter(const CoxeterMatrix& m, Theory theory);

enum class VerdictKind { ExactMatch, MatchUpToExtension, Mismatch };
std::string to_string(VerdictKind v);

struct Verdict {
  int degree = 0;
  VerdictKind kind = VerdictKind::Mismatch;
  std::vector<AbutmentPiece> pieces;
  std::string diff;  // empty unless Mismatch
};

/// Necessary conditions for g to be an extension of the given pieces.
bool admissible_extension(const AbGroup& g, const std::vector<AbGroup>& pieces);

std::vector<Verdict> compare(const std::vector<AbutmentReport>& computed, const ClosedForm& closed);

}  // namespace eqk
