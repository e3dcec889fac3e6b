#include "centlab/catalog.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "centlab/isoclinism.hpp"
#include "centlab/numeric.hpp"
#include "centlab/structure.hpp"

namespace centlab {

std::vector<std::string> default_product_specs() {
  return {"Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "Q8xZ3", "A5xZ2"};
}

std::vector<CatalogEntry> build_catalog(const CatalogOptions& opts) {
  const Limits& lim = opts.limits;
  if (opts.max_order > lim.table_cap)
    throw CapExceeded("build_catalog: max_order " + std::to_string(opts.max_order) +
                      " exceeds table cap " + std::to_string(lim.table_cap));

  std::vector<GroupSpec> specs;
  auto add = [&](const std::string& text) { specs.push_back(parse_spec(text)); };

  // Named groups lead so they survive isomorphism dedup against the
  // families below (S3 over D6, D8 from the dihedral family, ...).
  for (const char* s : {"S3", "S4", "A4", "A5", "Q8", "D8"}) add(s);
  for (int n = 1; n <= opts.max_order; ++n) add("Z" + std::to_string(n));
  for (int n = 2; n <= opts.max_order; n += 2) add("D" + std::to_string(n));
  // The nonabelian group of order pq exists exactly when q | p-1; together
  // with Z_pq (already present as a cyclic) this exhausts order-pq groups.
  for (int p = 3; 2 * p <= opts.max_order; ++p) {
    if (!is_prime(p)) continue;
    for (int q = 2; q < p; ++q) {
      if (!is_prime(q) || (p - 1) % q != 0) continue;
      if (p * q > opts.max_order) continue;
      add("Z" + std::to_string(p) + ":Z" + std::to_string(q));
    }
  }
  for (const auto& s : opts.product_specs) add(s);
  if (opts.max_order >= 336) add("PGL(2,7)");

  std::vector<CatalogEntry> entries;
  for (const auto& spec : specs) {
    FiniteGroup g = realize(spec, lim);
    if (g.order() > opts.max_order) continue;
    CatalogEntry e;
    e.spec = spec;
    e.label = spec.render();
    e.group = std::move(g);
    e.stats = cent_set(e.group);
    e.cpo = is_cpo(e.group);
    entries.push_back(std::move(e));
  }

  if (!opts.dedup_isomorphic) return entries;

  std::vector<CatalogEntry> kept;
  for (auto& e : entries) {
    bool duplicate = false;
    for (const auto& k : kept) {
      if (k.group.order() != e.group.order()) continue;
      if (k.stats.cent_count != e.stats.cent_count) continue;
      if (k.stats.center_order != e.stats.center_order) continue;
      if (k.stats.derived_order != e.stats.derived_order) continue;
      try {
        if (is_isomorphic(k.group, e.group, lim)) {
          duplicate = true;
          break;
        }
      } catch (const CapExceeded&) {
        // Cannot certify isomorphism at this size; keep both.
      }
    }
    if (!duplicate) kept.push_back(std::move(e));
  }
  return kept;
}

SearchResult search_counterexamples(const std::vector<CatalogEntry>& catalog,
                                    const Limits& lim) {
  std::map<std::pair<int, int>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    buckets[{catalog[i].stats.cent_count, catalog[i].stats.derived_order}].push_back(i);

  SearchResult out;
  out.buckets = static_cast<int>(buckets.size());

  std::vector<std::optional<CommutatorPairing>> pairings(catalog.size());
  auto pairing_of = [&](std::size_t i) -> const CommutatorPairing& {
    if (!pairings[i]) pairings[i] = commutator_pairing(catalog[i].group);
    return *pairings[i];
  };

  for (const auto& [key, idx] : buckets) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const CatalogEntry& left = catalog[idx[a]];
        const CatalogEntry& right = catalog[idx[b]];
        ++out.pairs_examined;
        const IsoclinismResult r =
            find_isoclinism_prepared(pairing_of(idx[a]), pairing_of(idx[b]), lim);
        switch (r.verdict) {
          case IsoVerdict::Witness:
            out.isoclinic_pairs.emplace_back(left.label, right.label);
            break;
          case IsoVerdict::Inconclusive:
            out.inconclusive.push_back({left.label, right.label, r.reason});
            break;
          case IsoVerdict::Refuted: {
            // Re-verify from scratch before emitting: fresh centralizer
            // statistics, fresh derived subgroups, fresh search.
            const CentStats sl = cent_set(left.group);
            const CentStats sr = cent_set(right.group);
            if (sl.cent_count != sr.cent_count ||
                sl.derived_order != sr.derived_order)
              throw InvariantViolation("counterexample re-verification: invariants drifted");
            const IsoclinismResult again = find_isoclinism(left.group, right.group, lim);
            if (again.verdict != IsoVerdict::Refuted)
              throw InvariantViolation("counterexample re-verification: verdict drifted");
            CounterexampleReport rep;
            rep.left = left;
            rep.right = right;
            rep.shared_cent_count = sl.cent_count;
            rep.shared_derived_order = sl.derived_order;
            rep.refutation = again.reason;
            out.reports.push_back(std::move(rep));
            break;
          }
        }
      }
  }

  std::sort(out.reports.begin(), out.reports.end(),
            [](const CounterexampleReport& x, const CounterexampleReport& y) {
              if (x.shared_cent_count != y.shared_cent_count)
                return x.shared_cent_count < y.shared_cent_count;
              if (x.shared_derived_order != y.shared_derived_order)
                return x.shared_derived_order < y.shared_derived_order;
              if (x.left.label != y.left.label) return x.left.label < y.left.label;
              return x.right.label < y.right.label;
            });
  return out;
}

FamilyResult cpo_pair_family(int p, bool relaxed, const Limits& lim) {
  if (!is_prime(p)) throw InvalidParameter("family: p must be prime");
  FamilyResult out;
  out.p = p;
  if (relaxed) {
    auto primes = prime_divisors_of(p - 1);
    if (primes.empty()) {
      out.reason = "p-1 has no prime divisors";
      return out;
    }
    out.complements.assign(primes.rbegin(), primes.rend());
  } else {
    const auto f = factorize(p - 1);
    if (f.size() != 2 || f[0].second != 1 || f[1].second != 1) {
      out.reason = "p-1 is not a product of two distinct primes";
      return out;
    }
    out.complements = {f[1].first, f[0].first};
  }
  out.applicable = true;
  for (int q : out.complements) {
    CatalogEntry e;
    e.spec = parse_spec("Z" + std::to_string(p) + ":Z" + std::to_string(q));
    e.label = e.spec.render();
    e.group = realize(e.spec, lim);
    e.stats = cent_set(e.group);
    e.cpo = is_cpo(e.group);
    if (!e.cpo.is_cpo || e.stats.cent_count != p + 2 || e.stats.derived_order != p)
      throw InvariantViolation("family member " + e.label +
                               " violates the centralizer-count law");
    out.members.push_back(std::move(e));
  }
  return out;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

class Sweep {
 public:
  CheckResult& begin(std::string name) {
    report_.checks.push_back(CheckResult{std::move(name), true, 0, {}});
    return report_.checks.back();
  }
  VerificationReport take() { return std::move(report_); }

  static void item(CheckResult& c, bool ok, const std::string& label,
                   const std::string& detail) {
    ++c.checked;
    if (!ok) {
      c.pass = false;
      if (c.failures.size() < 20) c.failures.push_back(label + ": " + detail);
    }
  }

 private:
  VerificationReport report_;
};

Subgroup map_into(const std::vector<elem_t>& from_parent, const Subgroup& s) {
  Subgroup out;
  out.elems.reserve(s.elems.size());
  for (elem_t e : s.elems) {
    if (from_parent[e] < 0)
      throw InvariantViolation("subgroup element outside embedding");
    out.elems.push_back(from_parent[e]);
  }
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

bool structural_cpo_shape(const FiniteGroup& g) {
  if (is_prime(g.order())) return true;
  const auto f = factorize(g.order());
  if (f.size() != 2 || f[0].second != 1 || f[1].second != 1) return false;
  const int q = f[0].first, p = f[1].first;
  if ((p - 1) % q != 0) return false;
  const Subgroup fit = fitting(g);
  return fit.order() == p && fit == derived_subgroup(g);
}

}  // namespace

VerificationReport verify_catalog(const std::vector<CatalogEntry>& catalog,
                                  const Limits& lim) {
  Sweep sweep;

  {
    auto& c = sweep.begin("abelian-iff-one-centralizer");
    for (const auto& e : catalog)
      Sweep::item(c, (e.stats.cent_count == 1) == e.group.is_abelian(), e.label,
                  "cent count " + std::to_string(e.stats.cent_count) +
                      " vs abelian=" + std::to_string(e.group.is_abelian()));
  }

  {
    auto& c = sweep.begin("no-two-or-three-centralizer-groups");
    for (const auto& e : catalog)
      Sweep::item(c, e.stats.cent_count != 2 && e.stats.cent_count != 3, e.label,
                  "cent count " + std::to_string(e.stats.cent_count));
  }

  {
    auto& c = sweep.begin("lagrange-and-centralizer-sandwich");
    for (const auto& e : catalog) {
      if (e.group.order() > lim.lattice_cap) continue;
      const auto subs = all_subgroups(e.group, lim);
      const int whole = e.stats.cent_count;
      for (const auto& h : subs) {
        bool ok = e.group.order() % h.order() == 0;
        std::string detail;
        if (ok) {
          const int inner = cent_set(as_group(e.group, h).group).cent_count;
          const int relative = static_cast<int>(cent_of_subgroup(e.group, h).size());
          ok = inner <= relative && relative <= whole;
          if (!ok)
            detail = "sandwich " + std::to_string(inner) + " <= " +
                     std::to_string(relative) + " <= " + std::to_string(whole) +
                     " fails for subgroup of order " + std::to_string(h.order());
        } else {
          detail = "subgroup order does not divide group order";
        }
        Sweep::item(c, ok, e.label, detail);
      }
    }
  }

  {
    auto& c = sweep.begin("prime-centralizer-classification");
    for (const auto& e : catalog) {
      const bool shape = structural_cpo_shape(e.group);
      Sweep::item(c, shape == e.cpo.is_cpo, e.label,
                  std::string("structural shape ") + (shape ? "holds" : "fails") +
                      " but verdict is " + (e.cpo.is_cpo ? "positive" : "negative"));
    }
  }

  {
    auto& c = sweep.begin("cpo-subgroups-nilpotent-group-solvable");
    for (const auto& e : catalog) {
      if (!e.cpo.is_cpo || e.cpo.kind != CpoCase::PQCase) continue;
      if (e.group.order() > lim.lattice_cap) continue;
      bool ok = is_solvable(e.group) && !is_nilpotent(e.group);
      std::string detail = ok ? "" : "not solvable-and-non-nilpotent";
      if (ok) {
        for (const auto& h : all_subgroups(e.group, lim)) {
          if (h.order() == e.group.order()) continue;
          if (!is_nilpotent(as_group(e.group, h).group)) {
            ok = false;
            detail = "proper subgroup of order " + std::to_string(h.order()) +
                     " is not nilpotent";
            break;
          }
        }
      }
      Sweep::item(c, ok, e.label, detail);
    }
  }

  {
    auto& c = sweep.begin("cpo-fitting-single-prime-core");
    for (const auto& e : catalog) {
      if (!e.cpo.is_cpo || e.cpo.kind != CpoCase::PQCase) continue;
      const Subgroup fit = fitting(e.group);
      int matching = 0;
      bool others_trivial = true;
      for (int p : prime_divisors(e.group)) {
        const Subgroup core = o_p(e.group, p);
        if (core == fit) ++matching;
        else if (core.order() != 1) others_trivial = false;
      }
      Sweep::item(c, matching == 1 && others_trivial, e.label,
                  "p-core structure does not pin the Fitting subgroup");
    }
  }

  {
    auto& c = sweep.begin("cpo-hereditary-subgroups-and-quotients");
    for (const auto& e : catalog) {
      if (!e.cpo.is_cpo || e.group.order() > lim.lattice_cap) continue;
      if (e.cpo.kind == CpoCase::Vacuous) continue;
      for (const auto& h : all_subgroups(e.group, lim)) {
        if (h.order() == 1) continue;
        Sweep::item(c, is_cpo(as_group(e.group, h).group).is_cpo, e.label,
                    "subgroup of order " + std::to_string(h.order()) +
                        " lacks prime-order centralizers");
        if (h.order() < e.group.order() && is_normal(e.group, h))
          Sweep::item(c, is_cpo(quotient(e.group, h).group).is_cpo, e.label,
                      "quotient by normal subgroup of order " +
                          std::to_string(h.order()) +
                          " lacks prime-order centralizers");
      }
    }
  }

  {
    auto& c = sweep.begin("cpo-cent-count-largest-prime-plus-two");
    for (const auto& e : catalog) {
      if (e.group.is_abelian()) continue;
      const CentCountLaw law = cpo_cent_count_law(e.group);
      if (!law.applicable) continue;
      Sweep::item(c, law.equals_largest_plus_two, e.label,
                  "cent count " + std::to_string(law.cent_count) + " != " +
                      std::to_string(law.largest_prime) + "+2");
    }
  }

  {
    auto& c = sweep.begin("cpo-cent-count-lower-bound");
    for (const auto& e : catalog) {
      if (e.group.is_abelian()) continue;
      const CentCountLaw law = cpo_cent_count_law(e.group);
      if (!law.applicable) continue;
      Sweep::item(c, law.at_least_smallest_plus_three, e.label,
                  "cent count " + std::to_string(law.cent_count) + " < " +
                      std::to_string(law.smallest_prime) + "+3");
    }
  }

  {
    auto& c = sweep.begin("cpo-frobenius-kernel-is-prime-fitting");
    for (const auto& e : catalog) {
      if (!e.cpo.is_cpo || e.cpo.kind != CpoCase::PQCase) continue;
      if (e.group.order() > lim.lattice_cap) continue;
      const auto fd = frobenius_decomposition(e.group, lim);
      bool ok = fd.has_value();
      std::string detail = ok ? "" : "no Frobenius decomposition found";
      if (ok) {
        ok = fd->kernel == fitting(e.group) && is_prime(fd->kernel.order()) &&
             as_group(e.group, fd->complement).group.is_abelian();
        if (!ok) detail = "kernel/complement shape is wrong";
      }
      Sweep::item(c, ok, e.label, detail);
    }
  }

  {
    auto& c = sweep.begin("cpo-centralizer-order-multiset");
    for (const auto& e : catalog) {
      if (!e.cpo.is_cpo || e.cpo.kind != CpoCase::PQCase) continue;
      std::map<int, int> expected{
          {e.cpo.q, e.cpo.p}, {e.cpo.p, 1}, {e.group.order(), 1}};
      Sweep::item(c, e.stats.order_multiset == expected, e.label,
                  "centralizer order multiset mismatch");
    }
  }

  {
    auto& c = sweep.begin("cpo-squarefree-sylow-trichotomy");
    for (const auto& e : catalog) {
      if (!e.cpo.is_cpo || e.cpo.kind == CpoCase::Vacuous) continue;
      const auto f = factorize(e.group.order());
      bool ok = std::all_of(f.begin(), f.end(),
                            [](const auto& pe) { return pe.second == 1; });
      std::string detail = ok ? "" : "order is not squarefree";
      if (ok) {
        // Every non-identity centralizer is one of the Sylow subgroups.
        std::map<int, std::set<std::vector<elem_t>>> sylow_sets;
        for (int p : prime_divisors(e.group))
          for (const auto& s : sylow(e.group, p).all) sylow_sets[p].insert(s.elems);
        for (elem_t x = 0; x < e.group.order() && ok; ++x) {
          if (x == e.group.identity()) continue;
          const Subgroup cg = centralizer(e.group, x);
          if (!sylow_sets[cg.order()].count(cg.elems)) {
            ok = false;
            detail = "a centralizer is not a Sylow subgroup";
          }
        }
      }
      if (ok) {
        // Distinct non-full centralizers intersect trivially.
        const auto& cs = e.stats.cent_set;
        for (std::size_t i = 0; i < cs.size() && ok; ++i)
          for (std::size_t j = i + 1; j < cs.size() && ok; ++j) {
            if (cs[i].order() == e.group.order() || cs[j].order() == e.group.order())
              continue;
            if (intersect(cs[i], cs[j]).order() != 1) {
              ok = false;
              detail = "two distinct proper centralizers intersect nontrivially";
            }
          }
      }
      if (ok && e.group.order() <= lim.lattice_cap) {
        // Subgroups with nontrivial center have prime order.
        for (const auto& h : all_subgroups(e.group, lim)) {
          if (h.order() == 1) continue;
          if (center(as_group(e.group, h).group).order() > 1 && !is_prime(h.order())) {
            ok = false;
            detail = "a subgroup with nontrivial center has composite order " +
                     std::to_string(h.order());
            break;
          }
        }
      }
      Sweep::item(c, ok, e.label, detail);
    }
  }

  {
    auto& c = sweep.begin("nilpotent-subgroup-sylow-quotient-cent-equality");
    for (const auto& e : catalog) {
      if (e.group.order() > lim.lattice_cap) continue;
      const auto subs = all_subgroups(e.group, lim);
      std::vector<Subgroup> sylows;
      for (int p : prime_divisors(e.group))
        for (const auto& s : sylow(e.group, p).all) sylows.push_back(s);
      for (const auto& m : subs) {
        const EmbeddedGroup mg = as_group(e.group, m);
        if (!is_nilpotent(mg.group)) continue;
        const Subgroup md = derived_of(e.group, m);
        for (const auto& p : sylows) {
          bool ok = true;
          std::string detail;
          try {
            const Subgroup k = map_into(mg.from_parent, intersect(m, p));
            const Subgroup kd = map_into(mg.from_parent, intersect(md, p));
            if (!is_normal(mg.group, k)) {
              ok = false;
              detail = "Sylow intersection is not normal in the nilpotent subgroup";
            } else {
              const int c1 = cent_set(quotient(mg.group, k).group).cent_count;
              const int c2 = cent_set(quotient(mg.group, kd).group).cent_count;
              ok = c1 == c2;
              if (!ok)
                detail = "quotient cent counts differ: " + std::to_string(c1) +
                         " vs " + std::to_string(c2);
            }
          } catch (const GroupError& err) {
            ok = false;
            detail = err.what();
          }
          Sweep::item(c, ok, e.label, detail);
        }
      }
    }
  }

  {
    auto& c = sweep.begin("split-perfect-cent-equality");
    for (const auto& e : catalog) {
      const Subgroup z = center(e.group);
      const Subgroup d = derived_subgroup(e.group);
      if (intersect(z, d).order() != 1) continue;
      if (!is_perfect(quotient(e.group, z).group)) continue;
      const int cg = e.stats.cent_count;
      const int cd = cent_set(as_group(e.group, d).group).cent_count;
      Sweep::item(c, cg == cd, e.label,
                  "cent counts differ: " + std::to_string(cg) + " vs " +
                      std::to_string(cd));
    }
  }

  {
    auto& c = sweep.begin("pgl2-7-centralizer-count");
    for (const auto& e : catalog) {
      if (e.label != "PGL(2,7)") continue;
      Sweep::item(c, e.stats.cent_count == 107, e.label,
                  "cent count " + std::to_string(e.stats.cent_count) + " != 107");
    }
  }

  {
    auto& c = sweep.begin("sylow-count-congruence");
    for (const auto& e : catalog) {
      for (int p : prime_divisors(e.group)) {
        bool ok = true;
        std::string detail;
        try {
          const SylowInfo info = sylow(e.group, p);
          ok = info.count % p == 1 &&
               (e.group.order() / info.prime_power) % info.count == 0;
          if (!ok) detail = "count " + std::to_string(info.count) + " at p=" + std::to_string(p);
        } catch (const GroupError& err) {
          ok = false;
          detail = err.what();
        }
        Sweep::item(c, ok, e.label, detail);
      }
    }
  }

  {
    auto& c = sweep.begin("isoclinism-preserves-cent-count");
    std::vector<const CatalogEntry*> small;
    for (const auto& e : catalog)
      if (e.group.order() <= 24) small.push_back(&e);
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j) {
        const IsoclinismResult r =
            find_isoclinism(small[i]->group, small[j]->group, lim);
        if (r.verdict != IsoVerdict::Witness) continue;
        Sweep::item(c, small[i]->stats.cent_count == small[j]->stats.cent_count,
                    small[i]->label + " ~ " + small[j]->label,
                    "isoclinic pair with different cent counts");
      }
  }

  return sweep.take();
}

}  // namespace centlab
