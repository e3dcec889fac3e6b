#include "centlab/structure.hpp"

#include <algorithm>
#include <set>

#include "centlab/numeric.hpp"

namespace centlab {

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<elem_t>& gens) {
  for (elem_t e : gens)
    if (e < 0 || e >= g.order())
      throw InvalidParameter("generated_subgroup: generator out of range");
  return Subgroup{close_under_product(g, gens)};
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (elem_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (elem_t b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        break;
      }
    if (central) z.elems.push_back(a);
  }
  return z;
}

Subgroup derived_of(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<elem_t> comms;
  for (elem_t a : h.elems)
    for (elem_t b : h.elems) {
      const elem_t c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return Subgroup{close_under_product(g, comms)};
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  return derived_of(g, Subgroup::whole(g));
}

bool is_solvable(const FiniteGroup& g) {
  Subgroup s = Subgroup::whole(g);
  for (;;) {
    Subgroup d = derived_of(g, s);
    if (d.order() == 1) return true;
    if (d.order() == s.order()) return false;
    s = std::move(d);
  }
}

bool is_nilpotent(const FiniteGroup& g) {
  for (int p : prime_divisors(g))
    if (sylow(g, p).count != 1) return false;
  return true;
}

bool is_perfect(const FiniteGroup& g) {
  return derived_subgroup(g).order() == g.order();
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, elem_t x) {
  Subgroup out;
  out.elems.reserve(h.elems.size());
  for (elem_t a : h.elems) out.elems.push_back(g.conjugate(x, a));
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup out;
  for (elem_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (elem_t a : h.elems)
      if (!h.contains(g.conjugate(x, a))) {
        fixes = false;
        break;
      }
    if (fixes) out.elems.push_back(x);
  }
  return out;
}

SylowInfo sylow(const FiniteGroup& g, int p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw InvalidParameter("sylow: p must be a prime dividing the group order");
  const int pk = p_part(g.order(), p);

  // Seed with a cyclic p-subgroup: any element of order divisible by p,
  // powered down to its p-part.
  elem_t seed = -1;
  for (elem_t a = 0; a < g.order(); ++a) {
    const int o = g.element_order(a);
    if (o % p == 0) {
      seed = g.power(a, o / p_part(o, p));
      break;
    }
  }
  if (seed < 0) throw InvariantViolation("sylow: no p-element found");

  Subgroup rep = generated_subgroup(g, {seed});
  while (rep.order() < pk) {
    const Subgroup nz = normalizer(g, rep);
    bool grown = false;
    for (elem_t z : nz.elems) {
      if (rep.contains(z)) continue;
      std::vector<elem_t> gens = rep.elems;
      gens.push_back(z);
      Subgroup bigger{close_under_product(g, gens)};
      if (bigger.order() > rep.order() && prime_power_base(bigger.order()) == p) {
        rep = std::move(bigger);
        grown = true;
        break;
      }
    }
    if (!grown) throw InvariantViolation("sylow: normalizer growth stalled");
  }

  std::set<std::vector<elem_t>> conj;
  for (elem_t x = 0; x < g.order(); ++x)
    conj.insert(conjugate_subgroup(g, rep, x).elems);
  SylowInfo info;
  info.p = p;
  info.prime_power = pk;
  info.sylow = std::move(rep);
  info.count = static_cast<int>(conj.size());
  for (auto& e : conj) info.all.push_back(Subgroup{e});

  if (info.count % p != 1)
    throw InvariantViolation("sylow: count not congruent to 1 mod p");
  if ((g.order() / pk) % info.count != 0)
    throw InvariantViolation("sylow: count does not divide the index");
  return info;
}

Subgroup o_p(const FiniteGroup& g, int p) {
  const SylowInfo info = sylow(g, p);
  Subgroup core = info.all.front();
  for (std::size_t i = 1; i < info.all.size(); ++i) core = intersect(core, info.all[i]);
  return core;
}

Subgroup fitting(const FiniteGroup& g) {
  std::vector<elem_t> gens;
  for (int p : prime_divisors(g)) {
    const Subgroup c = o_p(g, p);
    gens.insert(gens.end(), c.elems.begin(), c.elems.end());
  }
  Subgroup f{close_under_product(g, gens)};
  if (!is_nilpotent(as_group(g, f).group))
    throw InvariantViolation("fitting: result is not nilpotent");
  return f;
}

bool subgroup_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(), a.elems.end());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(out.elems));
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& lim) {
  if (g.order() > lim.lattice_cap)
    throw CapExceeded("all_subgroups: order " + std::to_string(g.order()) +
                      " exceeds lattice cap " + std::to_string(lim.lattice_cap));

  std::set<std::vector<elem_t>> seen;
  std::vector<Subgroup> subs;
  auto add = [&](std::vector<elem_t> e) {
    if (seen.insert(e).second) subs.push_back(Subgroup{std::move(e)});
  };

  add({g.identity()});
  for (elem_t a = 0; a < g.order(); ++a)
    add(close_under_product(g, {a}));

  // Pairwise joins until fixpoint. Each unordered pair is joined exactly
  // once; every subgroup is a join of cyclic subgroups, so this reaches
  // the whole lattice.
  for (std::size_t i = 1; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Subgroup& a = subs[i];
      const Subgroup& b = subs[j];
      if (subgroup_subset(a, b) || subgroup_subset(b, a)) continue;
      std::vector<elem_t> u = a.elems;
      u.insert(u.end(), b.elems.begin(), b.elems.end());
      add(close_under_product(g, u));
    }

  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return subs;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (elem_t x = 0; x < g.order(); ++x)
    for (elem_t a : h.elems)
      if (!h.contains(g.conjugate(x, a))) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& lim) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g, lim))
    if (is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(const FiniteGroup& g,
                                                              const Limits& lim) {
  const auto subs = all_subgroups(g, lim);  // sorted by (order, elems)
  for (const auto& n : subs) {
    if (n.order() == 1 || n.order() == g.order()) continue;
    if (!is_normal(g, n)) continue;
    bool kernel_ok = true;
    for (elem_t x : n.elems) {
      if (x == g.identity()) continue;
      // C_G(x) ⊆ N, checked directly on the table.
      for (elem_t y = 0; y < g.order() && kernel_ok; ++y)
        if (g.mul(x, y) == g.mul(y, x) && !n.contains(y)) kernel_ok = false;
      if (!kernel_ok) break;
    }
    if (!kernel_ok) continue;
    for (const auto& h : subs) {
      if (n.order() * h.order() != g.order()) continue;
      if (intersect(n, h).order() != 1) continue;
      return FrobeniusDecomposition{n, h};
    }
  }
  return std::nullopt;
}

std::vector<int> prime_divisors(const FiniteGroup& g) {
  return prime_divisors_of(g.order());
}

}  // namespace centlab
