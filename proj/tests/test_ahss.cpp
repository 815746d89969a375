#include <doctest.h>

#include "printing.hpp"

#include <random>

#include "corpus.hpp"
#include "eqk/ahss.hpp"
#include "eqk/closed_form.hpp"
#include "eqk/error.hpp"
#include "eqk/panel_complex.hpp"

using namespace eqk;

namespace {

OrbitComplex davis(const CoxeterMatrix& m) { return build_davis_orbit_complex(enumerate_spherical_subsets(m)); }

OrbitComplex bestvina(const CoxeterMatrix& m) {
  auto q = enumerate_spherical_subsets(m);
  return orbit_complex_from_panel(build_bestvina_complex(q), q);
}

const AbGroup Z2 = AbGroup::free_and_two(0, 1);

AbGroup twos(std::size_t k) { return AbGroup::free_and_two(0, k); }

E2Page page_from(Theory t, const std::vector<std::vector<AbGroup>>& columns) { return E2Page(t, columns); }

// d_r : E^{p,q} -> E^{p+r,q-r+1}, tested directly in (p, q) coordinates
bool has_positional_pair(const E2Page& page) {
  const long per = page.period();
  for (std::size_t p = 0; p < page.columns(); ++p) {
    for (long q = -per + 1; q <= 0; ++q) {
      for (std::size_t r = 2; p + r < page.columns(); ++r) {
        if (!page.at_q(p, q).is_zero() && !page.at_q(p + r, q - static_cast<long>(r) + 1).is_zero()) return true;
      }
    }
  }
  return false;
}

bool all_exact(const std::vector<Verdict>& vs) {
  for (const auto& v : vs) {
    if (v.kind != VerdictKind::ExactMatch) return false;
  }
  return true;
}

std::vector<Verdict> check_amalgam(const AmalgamSpec& s, Theory t) {
  return compare(assemble_abutment(build_e2(build_amalgam_orbit_complex(s), t)), closed_form_amalgam(s, t));
}

// sigma evaluated straight from the summation, r_0 = r_{k+1} = 1
long sigma_k(const AmalgamSpec& s) {
  long total = 0;
  for (std::size_t i = 0; i <= s.k(); ++i) {
    const long left = i == 0 ? 1 : static_cast<long>(s.r[i - 1]);
    const long right = i == s.k() ? 1 : static_cast<long>(s.r[i]);
    total += static_cast<long>(s.m[i]) * left * right;
  }
  for (auto r : s.r) total -= static_cast<long>(r);
  return total;
}

long parameter(const ClosedForm& cf, const std::string& name) {
  for (const auto& [n, v] : cf.parameters) {
    if (n == name) return v;
  }
  FAIL("missing parameter " << name);
  return 0;
}

}  // namespace

TEST_CASE("polygon E2 page matches the two-column picture") {
  const std::size_t n = 5;
  for (const OrbitComplex& x : {davis(corpus::polygon(n)), bestvina(corpus::polygon(n))}) {
    E2Page page = build_e2(x, Theory::KO);
    for (unsigned row = 0; row < 8; ++row) {
      const bool free_row = row == 0 || row == 4, two_row = row == 1 || row == 2;
      CHECK(page.at(0, row) == (free_row ? AbGroup(n + 3) : two_row ? twos(n + 3) : AbGroup()));
      CHECK(page.at(1, row) == (free_row ? AbGroup(1) : two_row ? Z2 : AbGroup()));
      for (std::size_t p = 2; p < page.columns(); ++p) CHECK(page.at(p, row).is_zero());
    }
  }
}

TEST_CASE("amalgam K page is a single column on the even row") {
  E2Page page = build_e2(build_amalgam_orbit_complex({{2}, {3, 2}}), Theory::K);
  CHECK(page.period() == 2);
  CHECK(page.at(0, 0) == AbGroup(8));
  CHECK(page.at(0, 1).is_zero());
  CHECK(page.at(1, 0).is_zero());
  CHECK(page.at(1, 1).is_zero());
}

TEST_CASE("empty complex has an empty page") {
  E2Page page = build_e2(OrbitComplex(), Theory::KO);
  CHECK(page.columns() == 0);
  CHECK(detect_collapse(page));
  for (const auto& r : assemble_abutment(page)) {
    CHECK(r.pieces.empty());
    CHECK(r.resolved == AbGroup());
  }
}

TEST_CASE("page entries repeat with the period") {
  E2Page page = build_e2(davis(corpus::polygon(3)), Theory::KO);
  for (std::size_t p = 0; p < page.columns(); ++p) {
    for (long q = -20; q <= 20; ++q) CHECK(page.at_q(p, q) == page.at_q(p, q + 8));
  }
  E2Page k = build_e2(davis(corpus::polygon(3)), Theory::K);
  for (std::size_t p = 0; p < k.columns(); ++p) {
    CHECK(k.at_q(p, -1).is_zero());
    CHECK(k.at_q(p, 4) == k.at_q(p, 0));
  }
}

TEST_CASE("collapse detection on small pages") {
  CHECK(detect_collapse(page_from(Theory::K, {{AbGroup(3), AbGroup(1)}, {AbGroup(1), Z2}})));
  CHECK(detect_collapse(page_from(Theory::KO, {std::vector<AbGroup>(8, AbGroup(2))})));
  std::vector<std::vector<AbGroup>> cols(3, std::vector<AbGroup>(2));
  cols[0][0] = AbGroup(1);  // E^{0,0}
  cols[2][1] = AbGroup(1);  // E^{2,-1}
  CHECK_FALSE(detect_collapse(page_from(Theory::K, cols)));
  CHECK_THROWS_AS(assemble_abutment(page_from(Theory::K, cols)), Error);
}

TEST_CASE("collapse detection never misses a positional pair") {
  // every zero pattern on 4 columns of a K page
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<std::vector<AbGroup>> cols(4, std::vector<AbGroup>(2));
    for (unsigned i = 0; i < 8; ++i) {
      if (bits >> i & 1) cols[i / 2][i % 2] = AbGroup(1);
    }
    E2Page page = page_from(Theory::K, cols);
    CHECK(detect_collapse(page) == !has_positional_pair(page));
  }
  std::mt19937 rng(5);
  std::bernoulli_distribution sparse(0.15);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::vector<AbGroup>> cols(5, std::vector<AbGroup>(8));
    for (auto& col : cols) {
      for (auto& g : col) {
        if (sparse(rng)) g = Z2;
      }
    }
    E2Page page = page_from(Theory::KO, cols);
    CHECK(detect_collapse(page) == !has_positional_pair(page));
  }
}

TEST_CASE("polygon abutment") {
  const std::size_t n = 5;
  auto k = assemble_abutment(build_e2(davis(corpus::polygon(n)), Theory::K));
  REQUIRE(k.size() == 2);
  CHECK(k[0].resolved == AbGroup(8));
  CHECK(k[1].degree == -1);
  CHECK(k[1].resolved == AbGroup(1));
  REQUIRE(k[1].pieces.size() == 1);
  CHECK(k[1].pieces[0].p == 1);

  auto ko = assemble_abutment(build_e2(davis(corpus::polygon(n)), Theory::KO));
  const AbutmentReport& minus1 = ko[1];
  CHECK(minus1.degree == -1);
  CHECK(minus1.extension_ambiguous);
  CHECK_FALSE(minus1.resolved.has_value());
  REQUIRE(minus1.pieces.size() == 2);
  CHECK(minus1.pieces[0].p == 0);
  CHECK(minus1.pieces[0].group == twos(n + 3));
  CHECK(minus1.pieces[1].p == 1);
  CHECK(minus1.pieces[1].group == Z2);
  // free quotient over a finite subgroup splits
  CHECK(ko[0].resolved == AbGroup::free_and_two(n + 3, 1));
}

TEST_CASE("single-column pages resolve to their pieces") {
  E2Page page = build_e2(build_amalgam_orbit_complex({{1}, {3, 2}}), Theory::KO);
  for (const auto& r : assemble_abutment(page)) {
    CHECK_FALSE(r.extension_ambiguous);
    const unsigned row = static_cast<unsigned>(-r.degree);
    CHECK(r.resolved == page.at(0, row));
  }
}

TEST_CASE("extensions split only when forced") {
  const AbGroup Z3 = AbGroup::from_orders(0, {3});
  auto resolve = [](const AbGroup& bottom, const AbGroup& top) {
    // degree 0 collects E^{0,0} (quotient) and E^{1,-1} (subgroup)
    std::vector<std::vector<AbGroup>> cols(2, std::vector<AbGroup>(2));
    cols[0][0] = top;
    cols[1][1] = bottom;
    return assemble_abutment(E2Page(Theory::K, cols))[0];
  };
  CHECK(resolve(AbGroup(2), AbGroup(1)).resolved == AbGroup(3));
  CHECK(resolve(Z2, AbGroup(1)).resolved == AbGroup::free_and_two(1, 1));
  CHECK(resolve(Z2, Z3).resolved == AbGroup::from_orders(0, {6}));
  CHECK(resolve(Z3, Z2).resolved == AbGroup::from_orders(0, {6}));
  CHECK(resolve(AbGroup(1), Z2).extension_ambiguous);
  CHECK(resolve(Z2, Z2).extension_ambiguous);
  CHECK(resolve(AbGroup(), Z2).resolved == Z2);
}

TEST_CASE("amalgam closed forms from the printed formulas") {
  const AmalgamSpec sl2{{2}, {3, 2}}, psl2{{1}, {3, 2}}, dinf{{1}, {2, 2}};
  CHECK(sigma_k(sl2) == 8);
  CHECK(parameter(closed_form_amalgam(sl2, Theory::K), "sigma") == sigma_k(sl2));
  CHECK(parameter(closed_form_amalgam(psl2, Theory::K), "sigma") == 4);
  CHECK(parameter(closed_form_amalgam(dinf, Theory::K), "sigma") == 3);

  ClosedForm p = closed_form_amalgam(psl2, Theory::KO);
  CHECK(parameter(p, "sigma") == 3);
  CHECK(parameter(p, "omega") == 2);
  CHECK(parameter(p, "theta") == 1);
  CHECK(p.at(-6).group == AbGroup(1));
  CHECK(p.at(-2).group == AbGroup::free_and_two(1, 2));
  ClosedForm d = closed_form_amalgam(dinf, Theory::KO);
  CHECK(parameter(d, "sigma") == 3);
  CHECK(parameter(d, "omega") == 3);
  CHECK(parameter(d, "theta") == 0);
  for (int deg : {-3, -5, -7}) CHECK(d.at(deg).group == AbGroup());
  CHECK_THROWS_AS(closed_form_amalgam(sl2, Theory::KO), Error);
}

TEST_CASE("amalgam grid matches the closed form exactly") {
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<std::uint64_t> rs(k), ms(k + 1);
    for (std::size_t code = 0;; ++code) {
      std::size_t c = code;
      for (auto& r : rs) r = 1 + 2 * (c % 3), c /= 3;
      for (auto& m : ms) m = 2 + c % 3, c /= 3;
      if (c != 0) break;
      const AmalgamSpec s{rs, ms};
      CHECK(parameter(closed_form_amalgam(s, Theory::K), "sigma") == sigma_k(s));
      CHECK(all_exact(check_amalgam(s, Theory::K)));
      CHECK(all_exact(check_amalgam(s, Theory::KO)));
    }
  }
}

TEST_CASE("right-angled closed form counts commuting cliques") {
  CHECK(count_commuting_cliques(corpus::right_angled_cycle(5)) == 11);
  CHECK(count_commuting_cliques(CoxeterMatrix(corpus::blank(2))) == 3);
  CHECK(count_commuting_cliques(CoxeterMatrix()) == 1);
  CHECK(closed_form_right_angled(CoxeterMatrix(), Theory::K).at(0).group == AbGroup(1));
  CHECK_THROWS_AS(closed_form_right_angled(corpus::path(3), Theory::K), Error);
  for (const auto& m : corpus::right_angled_corpus()) {
    CHECK(count_commuting_cliques(m) == corpus::spherical_by_gram(m).size());
  }
}

TEST_CASE("right-angled corpus matches the closed form exactly") {
  for (const auto& m : corpus::right_angled_corpus()) {
    for (Theory t : {Theory::K, Theory::KO}) {
      auto reports = assemble_abutment(build_e2(davis(m), t));
      CHECK(all_exact(compare(reports, closed_form_right_angled(m, t))));
    }
  }
}

TEST_CASE("path family matches the closed form exactly") {
  for (std::size_t n : {3, 5, 8}) {
    for (Theory t : {Theory::K, Theory::KO}) {
      auto reports = assemble_abutment(build_e2(bestvina(corpus::path(n)), t));
      CHECK(all_exact(compare(reports, closed_form_path(n, t))));
    }
  }
}

TEST_CASE("structural family detection") {
  std::size_t n = 0;
  CHECK(detect_family(corpus::path(4), &n) == CoxeterFamily::Path);
  CHECK(n == 4);
  CHECK(detect_family(corpus::polygon(6), &n) == CoxeterFamily::Polygon);
  CHECK(n == 6);
  CHECK(detect_family(corpus::right_angled_cycle(5)) == CoxeterFamily::RightAngled);
  corpus::Rows m = corpus::blank(3);
  corpus::set(m, 0, 1, 3);
  corpus::set(m, 1, 2, 4);
  CHECK(detect_family(CoxeterMatrix(m)) == CoxeterFamily::None);
  CHECK_FALSE(closed_form_coxeter(CoxeterMatrix(m), Theory::K).has_value());
}

TEST_CASE("admissible extensions") {
  const std::vector<AbGroup> two_twos{Z2, Z2};
  CHECK(admissible_extension(AbGroup::from_orders(0, {4}), two_twos));
  CHECK(admissible_extension(twos(2), two_twos));
  CHECK_FALSE(admissible_extension(AbGroup::from_orders(0, {8}), two_twos));
  CHECK_FALSE(admissible_extension(Z2, two_twos));
  CHECK(admissible_extension(AbGroup(1), {AbGroup(1), Z2}));
  CHECK_FALSE(admissible_extension(AbGroup(2), {AbGroup(1), Z2}));
}

TEST_CASE("compare verdicts") {
  const AmalgamSpec sl2{{2}, {3, 2}};
  CHECK(all_exact(check_amalgam(sl2, Theory::K)));

  ClosedForm perturbed = closed_form_amalgam(sl2, Theory::K);
  perturbed.degrees[0].group = AbGroup(9);
  auto vs = compare(assemble_abutment(build_e2(build_amalgam_orbit_complex(sl2), Theory::K)), perturbed);
  CHECK(vs[0].kind == VerdictKind::Mismatch);
  CHECK_FALSE(vs[0].diff.empty());
  CHECK(vs[1].kind == VerdictKind::ExactMatch);

  auto poly = compare(assemble_abutment(build_e2(davis(corpus::polygon(5)), Theory::KO)), closed_form_polygon(5, Theory::KO));
  CHECK(poly[1].degree == -1);
  CHECK(poly[1].kind == VerdictKind::MatchUpToExtension);
  CHECK(poly[1].pieces.size() == 2);
}
