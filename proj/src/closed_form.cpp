#include "eqk/closed_form.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "eqk/error.hpp"

namespace eqk {

const ClosedFormEntry& ClosedForm::at(int degree) const {
  for (const auto& e : degrees) {
    if (e.degree == degree) return e;
  }
  throw Error(ErrorKind::InvalidInput, "closed form has no degree " + std::to_string(degree));
}

namespace {

ClosedFormEntry entry(int degree, AbGroup g, std::string formula) {
  return {degree, std::move(g), {}, std::move(formula)};
}

long halve(long twice, const char* what) {
  if (twice % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " is not an integer for this input");
  }
  return twice / 2;
}

std::size_t as_rank(long v, const char* what) {
  if (v < 0) throw Error(ErrorKind::InvalidInput, std::string(what) + " is negative for this input");
  return static_cast<std::size_t>(v);
}

// KO table shared by the right-angled and path families
ClosedForm ko_two_row_table(std::string family, std::size_t d, const std::string& name) {
  ClosedForm cf{Theory::KO, std::move(family), {{name, static_cast<long>(d)}}, {}};
  for (int n = 0; n < 8; ++n) {
    if (n == 0 || n == 4) {
      cf.degrees.push_back(entry(-n, AbGroup(d), "Z^" + name));
    } else if (n == 1 || n == 2) {
      cf.degrees.push_back(entry(-n, AbGroup::free_and_two(0, d), "(Z/2)^" + name));
    } else {
      cf.degrees.push_back(entry(-n, AbGroup(), "0"));
    }
  }
  return cf;
}

ClosedForm k_table(std::string family, std::size_t even, std::size_t odd, const std::string& name,
                   long value, const std::string& odd_formula) {
  ClosedForm cf{Theory::K, std::move(family), {{name, value}}, {}};
  cf.degrees.push_back(entry(0, AbGroup(even), "Z^" + name));
  cf.degrees.push_back(entry(-1, AbGroup(odd), odd_formula));
  return cf;
}

}  // namespace

ClosedForm closed_form_amalgam(const AmalgamSpec& spec, Theory theory) {
  spec.validate();
  const std::size_t k = spec.k();
  long vertex_sum = 0, r_sum = 0;
  for (std::size_t i = 0; i <= k; ++i) vertex_sum += static_cast<long>(spec.vertex_order(i));
  for (std::size_t i = 1; i <= k; ++i) r_sum += static_cast<long>(spec.r_at(i));

  if (theory == Theory::K) {
    const long sigma = vertex_sum - r_sum;
    return k_table("amalgam", as_rank(sigma, "sigma"), 0, "sigma", sigma, "0");
  }

  if (!spec.all_r_odd()) {
    throw Error(ErrorKind::InvalidInput, "ko closed form needs every r_i odd", "r");
  }
  long floor_sum = 0, ceil_sum = 0, sign_sum = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    const long s = static_cast<long>(spec.vertex_order(i));
    floor_sum += s / 2;
    ceil_sum += (s + 1) / 2;
    sign_sum += spec.m[i] % 2 == 0 ? 1 : -1;
  }
  const long kk = static_cast<long>(k);
  // all three carry halves; work with doubled values
  const long sigma = halve(2 * floor_sum - r_sum + kk + 2, "sigma");
  const long omega = halve(sign_sum + kk + 3, "omega");
  const long theta = halve(2 * ceil_sum - r_sum - kk - 2, "theta");
  const std::size_t s = as_rank(sigma, "sigma"), w = as_rank(omega, "omega"), t = as_rank(theta, "theta");

  ClosedForm cf{Theory::KO, "amalgam", {{"sigma", sigma}, {"omega", omega}, {"theta", theta}}, {}};
  for (int n = 0; n < 8; ++n) {
    switch (n) {
      case 0:
      case 4: cf.degrees.push_back(entry(-n, AbGroup(s), "Z^sigma")); break;
      case 1: cf.degrees.push_back(entry(-n, AbGroup::free_and_two(0, w), "(Z/2)^omega")); break;
      case 2: cf.degrees.push_back(entry(-n, AbGroup::free_and_two(t, w), "(Z/2)^omega (+) Z^theta")); break;
      case 6: cf.degrees.push_back(entry(-n, AbGroup(t), "Z^theta")); break;
      default: cf.degrees.push_back(entry(-n, AbGroup(), "0"));
    }
  }
  return cf;
}

std::size_t count_commuting_cliques(const CoxeterMatrix& m) {
  const std::size_t size = m.size();
  std::vector<SubsetMask> adjacent(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j && m.at(i, j) == 2) adjacent[i] |= SubsetMask{1} << j;
    }
  }
  // extend each clique only by vertices above its largest member
  std::function<std::size_t(SubsetMask)> grow = [&](SubsetMask candidates) -> std::size_t {
    std::size_t total = 1;
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      total += grow(candidates & adjacent[static_cast<std::size_t>(v)]);
    }
    return total;
  };
  const SubsetMask all = size == 64 ? ~SubsetMask{0} : (SubsetMask{1} << size) - 1;
  return grow(all);
}

ClosedForm closed_form_right_angled(const CoxeterMatrix& m, Theory theory) {
  if (!m.is_right_angled()) {
    throw Error(ErrorKind::InvalidInput, "closed form needs a right-angled Coxeter matrix", "m");
  }
  const std::size_t d = count_commuting_cliques(m);
  if (theory == Theory::K) return k_table("right_angled", d, 0, "d", static_cast<long>(d), "0");
  return ko_two_row_table("right_angled", d, "d");
}

ClosedForm closed_form_path(std::size_t n, Theory theory) {
  ClosedForm cf = theory == Theory::K ? k_table("path", n + 2, 0, "n+2", static_cast<long>(n + 2), "0")
                                      : ko_two_row_table("path", n + 2, "n+2");
  cf.parameters.insert(cf.parameters.begin(), {"n", static_cast<long>(n)});
  return cf;
}

ClosedForm closed_form_polygon(std::size_t n, Theory theory) {
  const std::size_t big = n + 3;
  ClosedForm cf;
  if (theory == Theory::K) {
    cf = k_table("polygon", big, 1, "n+3", static_cast<long>(big), "Z");
  } else {
    cf = ClosedForm{Theory::KO, "polygon", {{"n+3", static_cast<long>(big)}}, {}};
    const AbGroup two = AbGroup::free_and_two(0, 1);
    cf.degrees.push_back(entry(0, AbGroup::free_and_two(big, 1), "Z/2 (+) Z^(n+3)"));
    cf.degrees.push_back({-1, std::nullopt, {two, AbGroup::free_and_two(0, big)}, "extension of Z/2 by (Z/2)^(n+3)"});
    cf.degrees.push_back(entry(-2, AbGroup::free_and_two(0, big), "(Z/2)^(n+3)"));
    cf.degrees.push_back(entry(-3, two, "Z/2"));
    cf.degrees.push_back(entry(-4, AbGroup(big), "Z^(n+3)"));
    cf.degrees.push_back(entry(-5, AbGroup(), "0"));
    cf.degrees.push_back(entry(-6, AbGroup(), "0"));
    cf.degrees.push_back(entry(-7, two, "Z/2"));
  }
  cf.parameters.insert(cf.parameters.begin(), {"n", static_cast<long>(n)});
  return cf;
}

std::string to_string(CoxeterFamily f) {
  switch (f) {
    case CoxeterFamily::RightAngled: return "right_angled";
    case CoxeterFamily::Path: return "path";
    case CoxeterFamily::Polygon: return "polygon";
    case CoxeterFamily::None: break;
  }
  return "none";
}

CoxeterFamily detect_family(const CoxeterMatrix& m, std::size_t* n) {
  if (m.is_right_angled()) return CoxeterFamily::RightAngled;
  const std::size_t size = m.size();
  if (size < 2) return CoxeterFamily::None;
  auto cyclic_neighbours = [&](std::size_t i, std::size_t j) {
    const std::size_t gap = i > j ? i - j : j - i;
    return gap == 1 || (size >= 3 && gap == size - 1);
  };
  bool path = true, polygon = size >= 3;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      const std::uint64_t e = m.at(i, j);
      const bool adjacent = j == i + 1;
      if (adjacent ? e != 3 : e != 0) path = false;
      if (cyclic_neighbours(i, j) ? e != 3 : e != 0) polygon = false;
    }
  }
  if (n) *n = size - 1;
  if (path) return CoxeterFamily::Path;
  if (polygon) return CoxeterFamily::Polygon;
  return CoxeterFamily::None;
}

std::optional<ClosedForm> closed_form_coxeter(const CoxeterMatrix& m, Theory theory) {
  std::size_t n = 0;
  switch (detect_family(m, &n)) {
    case CoxeterFamily::RightAngled: return closed_form_right_angled(m, theory);
    case CoxeterFamily::Path: return closed_form_path(n, theory);
    case CoxeterFamily::Polygon: return closed_form_polygon(n, theory);
    case CoxeterFamily::None: break;
  }
  return std::nullopt;
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::ExactMatch: return "EXACT_MATCH";
    case VerdictKind::MatchUpToExtension: return "MATCH_UP_TO_EXTENSION";
    case VerdictKind::Mismatch: break;
  }
  return "MISMATCH";
}

namespace {

Integer exponent(const AbGroup& g) {
  return g.torsion().empty() ? Integer(1) : g.torsion().back();
}

bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

}  // namespace

bool admissible_extension(const AbGroup& g, const std::vector<AbGroup>& pieces) {
  std::size_t free = 0, gens = 0;
  Integer order = 1, exp = 1;
  for (const auto& p : pieces) {
    free += p.free_rank();
    gens += p.generators();
    order *= p.torsion_order();
    exp *= exponent(p);
  }
  if (g.free_rank() != free || g.generators() > gens) return false;
  if (!divides(g.torsion_order(), order) || !divides(exponent(g), exp)) return false;
  // with no free piece the torsion orders must multiply out exactly
  return free != 0 || g.torsion_order() == order;
}

namespace {

std::vector<AbGroup> nonzero_sorted(std::vector<AbGroup> gs) {
  std::erase_if(gs, [](const AbGroup& g) { return g.is_zero(); });
  std::sort(gs.begin(), gs.end(), [](const AbGroup& a, const AbGroup& b) { return to_string(a) < to_string(b); });
  return gs;
}

}  // namespace

std::vector<Verdict> compare(const std::vector<AbutmentReport>& computed, const ClosedForm& closed) {
  std::vector<Verdict> out;
  for (const auto& rep : computed) {
    const ClosedFormEntry& want = closed.at(rep.degree);
    Verdict v{rep.degree, VerdictKind::Mismatch, rep.pieces, {}};
    std::vector<AbGroup> pieces;
    for (const auto& p : rep.pieces) pieces.push_back(p.group);
    std::string got = rep.resolved ? to_string(*rep.resolved) : "extension of";
    if (!rep.resolved) {
      for (const auto& p : rep.pieces) got += " [" + to_string(p.group) + " at p=" + std::to_string(p.p) + "]";
    }

    if (want.group && rep.resolved) {
      if (*want.group == *rep.resolved) v.kind = VerdictKind::ExactMatch;
    } else if (want.group) {
      if (admissible_extension(*want.group, pieces)) v.kind = VerdictKind::MatchUpToExtension;
    } else if (rep.resolved) {
      if (admissible_extension(*rep.resolved, want.extension_of)) v.kind = VerdictKind::MatchUpToExtension;
    } else if (nonzero_sorted(pieces) == nonzero_sorted(want.extension_of)) {
      v.kind = VerdictKind::MatchUpToExtension;
    }

    if (v.kind == VerdictKind::Mismatch) {
      std::string expected = want.group ? to_string(*want.group) : "extension of";
      if (!want.group) {
        for (const auto& g : want.extension_of) expected += " [" + to_string(g) + "]";
      }
      v.diff = "computed " + got + ", closed form " + expected + " (" + want.formula + ")";
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace eqk
