#include "eqk/abgroup.hpp"

#include <sstream>

#include "eqk/error.hpp"

namespace eqk {

namespace {

// Smith-style normalization of a diagonal: replace (a, b) by (gcd, lcm) until
// the sequence is a divisor chain.
std::vector<Integer> normalize_torsion(std::vector<Integer> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), t[i].get_mpz_t(), t[j].get_mpz_t());
      if (g == t[i]) continue;
      mpz_lcm(l.get_mpz_t(), t[i].get_mpz_t(), t[j].get_mpz_t());
      t[i] = g;
      t[j] = l;
    }
  }
  std::vector<Integer> out;
  for (auto& d : t) {
    if (d != 1) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

AbGroup AbGroup::from_orders(const std::vector<Integer>& orders) {
  AbGroup g;
  std::vector<Integer> t;
  for (const auto& d : orders) {
    if (d == 0) {
      ++g.free_rank_;
    } else if (d < 0) {
      t.push_back(-d);
    } else {
      t.push_back(d);
    }
  }
  g.torsion_ = normalize_torsion(std::move(t));
  return g;
}

AbGroup AbGroup::from_orders(std::size_t free_rank, const std::vector<long>& torsion_orders) {
  std::vector<Integer> t;
  for (long d : torsion_orders) {
    if (d <= 0) throw Error(ErrorKind::InvalidInput, "torsion orders must be positive");
    t.emplace_back(d);
  }
  AbGroup g = from_orders(t);
  g.free_rank_ += free_rank;
  return g;
}

AbGroup AbGroup::free_and_two(std::size_t free_rank, std::size_t twos) {
  AbGroup g(free_rank);
  g.torsion_.assign(twos, Integer(2));
  return g;
}

std::size_t AbGroup::two_rank() const {
  std::size_t n = 0;
  for (const auto& d : torsion_) {
    if (mpz_even_p(d.get_mpz_t())) ++n;
  }
  return n;
}

Integer AbGroup::torsion_order() const {
  Integer p = 1;
  for (const auto& d : torsion_) p *= d;
  return p;
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
  std::vector<Integer> t = a.torsion_;
  t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
  AbGroup g;
  g.free_rank_ = a.free_rank_ + b.free_rank_;
  g.torsion_ = normalize_torsion(std::move(t));
  return g;
}

std::string to_string(const AbGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " (+) ";
    first = false;
  };
  if (g.free_rank() == 1) {
    sep();
    os << "Z";
  } else if (g.free_rank() > 1) {
    sep();
    os << "Z^" << g.free_rank();
  }
  const auto& t = g.torsion();
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    sep();
    if (j - i == 1) {
      os << "Z/" << t[i].get_str();
    } else {
      os << "(Z/" << t[i].get_str() << ")^" << (j - i);
    }
    i = j;
  }
  return os.str();
}

}  // namespace eqk
