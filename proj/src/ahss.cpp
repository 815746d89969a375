#include "eqk/ahss.hpp"

#include "eqk/error.hpp"

namespace eqk {

E2Page::E2Page(Theory theory, std::vector<std::vector<AbGroup>> columns)
    : theory_(theory), entries_(std::move(columns)) {
  for (const auto& col : entries_) {
    if (col.size() != eqk::period(theory_)) {
      throw Error(ErrorKind::InvalidInput, "each column needs one entry per row of the period");
    }
  }
}

const AbGroup& E2Page::at_q(std::size_t p, long q) const {
  const long per = static_cast<long>(period());
  const long n = ((-q) % per + per) % per;
  return at(p, static_cast<unsigned>(n));
}

E2Page build_e2(const OrbitComplex& x, Theory theory) {
  const std::size_t cols = x.dimension() < 0 ? 0 : static_cast<std::size_t>(x.dimension()) + 1;
  std::vector<std::vector<AbGroup>> entries(cols, std::vector<AbGroup>(period(theory)));
  for (unsigned n = 0; n < period(theory); ++n) {
    auto h = bredon_cohomology(x, {theory, n});
    for (std::size_t p = 0; p < cols; ++p) entries[p][n] = h[p];
  }
  return E2Page(theory, std::move(entries));
}

bool detect_collapse(const E2Page& page) {
  const unsigned per = page.period();
  for (std::size_t p = 0; p < page.columns(); ++p) {
    for (std::size_t r = 2; p + r < page.columns(); ++r) {
      for (unsigned n = 0; n < per; ++n) {
        // d_r : E^{p,q} -> E^{p+r,q-r+1}; with n = -q the target row is n+r-1
        const unsigned target = static_cast<unsigned>((n + r - 1) % per);
        if (!page.at(p, n).is_zero() && !page.at(p + r, target).is_zero()) return false;
      }
    }
  }
  return true;
}

namespace {

// Ext(q, a) = 0 exactly when q is free, or a is finite with order prime to
// every torsion coefficient of q.
bool ext_vanishes(const AbGroup& q, const AbGroup& a) {
  if (q.is_free()) return true;
  if (a.free_rank() != 0) return false;
  for (const auto& d : q.torsion()) {
    for (const auto& e : a.torsion()) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
      if (g != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<AbutmentReport> assemble_abutment(const E2Page& page) {
  if (!detect_collapse(page)) {
    throw Error(ErrorKind::NotKnownToCollapse, "the spectral sequence is not known to collapse at E2");
  }
  const unsigned per = page.period();
  std::vector<AbutmentReport> out;
  for (unsigned k = 0; k < per; ++k) {
    AbutmentReport rep;
    rep.degree = -static_cast<int>(k);
    for (std::size_t p = 0; p < page.columns(); ++p) {
      const unsigned n = static_cast<unsigned>((p + k) % per);  // q = degree - p
      if (!page.at(p, n).is_zero()) rep.pieces.push_back({p, n, page.at(p, n)});
    }
    // climb the filtration from the bottom subgroup
    AbGroup acc;
    bool forced = true;
    for (auto it = rep.pieces.rbegin(); it != rep.pieces.rend(); ++it) {
      if (!ext_vanishes(it->group, acc)) forced = false;
      acc = direct_sum(acc, it->group);
    }
    if (forced) {
      rep.resolved = acc;
    } else {
      rep.extension_ambiguous = true;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace eqk
