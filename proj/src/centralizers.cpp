#include "centlab/centralizers.hpp"

#include <algorithm>
#include <set>

#include "centlab/numeric.hpp"
#include "centlab/structure.hpp"

namespace centlab {

Subgroup centralizer(const FiniteGroup& g, elem_t x) {
  if (x < 0 || x >= g.order()) throw InvalidParameter("centralizer: element out of range");
  Subgroup c;
  for (elem_t y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.elems.push_back(y);
  return c;
}

namespace {

std::vector<Subgroup> sorted_distinct(std::set<std::vector<elem_t>>&& seen) {
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& e : seen) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return out;
}

}  // namespace

CentStats cent_set(const FiniteGroup& g) {
  std::set<std::vector<elem_t>> seen;
  for (elem_t x = 0; x < g.order(); ++x) seen.insert(centralizer(g, x).elems);
  CentStats s;
  s.cent_set = sorted_distinct(std::move(seen));
  s.cent_count = static_cast<int>(s.cent_set.size());
  s.center_order = center(g).order();
  s.derived_order = derived_subgroup(g).order();
  for (const auto& c : s.cent_set) ++s.order_multiset[c.order()];
  return s;
}

std::vector<Subgroup> cent_of_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::set<std::vector<elem_t>> seen;
  for (elem_t x : h.elems) seen.insert(centralizer(g, x).elems);
  return sorted_distinct(std::move(seen));
}

CpoVerdict is_cpo(const FiniteGroup& g, CpoMode mode) {
  CpoVerdict v;
  if (g.order() == 1) return v;  // NotCpo, no witness

  const Subgroup skip = mode == CpoMode::NonCentral ? center(g) : Subgroup::trivial(g);
  bool any_checked = false;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (skip.contains(x)) continue;
    any_checked = true;
    const int c = centralizer(g, x).order();
    if (!is_prime(c)) {
      v.witness = x;
      return v;  // NotCpo
    }
  }
  v.is_cpo = true;
  if (!any_checked) {
    v.kind = CpoCase::Vacuous;
    return v;
  }

  if (is_prime(g.order())) {
    v.kind = CpoCase::PrimeOrder;
    v.p = g.order();
    return v;
  }
  const auto f = factorize(g.order());
  if (f.size() != 2 || f[0].second != 1 || f[1].second != 1)
    throw InvariantViolation(g.label() + ": prime-centralizer group of order " +
                             std::to_string(g.order()) + " is not of order p*q");
  const int p = f[1].first, q = f[0].first;  // p > q
  if ((p - 1) % q != 0)
    throw InvariantViolation(g.label() + ": q does not divide p-1");
  const Subgroup fit = fitting(g);
  if (fit.order() != p || fit != derived_subgroup(g))
    throw InvariantViolation(g.label() + ": fitting subgroup is not the derived subgroup of order p");
  v.kind = CpoCase::PQCase;
  v.p = p;
  v.q = q;
  return v;
}

CnClass cn_class(const FiniteGroup& g) {
  CnClass c;
  c.n = cent_set(g).cent_count;
  if (c.n == 1) c.tag = "abelian";
  else if (c.n == 4) c.tag = "C4";
  else if (c.n == 5) c.tag = "C5";
  return c;
}

CentCountLaw cpo_cent_count_law(const FiniteGroup& g) {
  CentCountLaw law;
  if (g.is_abelian()) return law;
  const CpoVerdict v = is_cpo(g);
  if (!v.is_cpo) return law;
  const auto primes = prime_divisors(g);
  law.applicable = true;
  law.smallest_prime = primes.front();
  law.largest_prime = primes.back();
  law.cent_count = cent_set(g).cent_count;
  law.equals_largest_plus_two = law.cent_count == law.largest_prime + 2;
  law.at_least_smallest_plus_three = law.cent_count >= law.smallest_prime + 3;
  return law;
}

}  // namespace centlab
