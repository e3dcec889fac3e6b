#include "centlab/isoclinism.hpp"

#include <algorithm>

#include "centlab/centralizers.hpp"
#include "centlab/structure.hpp"

namespace centlab {

bool verify_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                        const IsomorphismWitness& w) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(w.mapping.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (elem_t x = 0; x < n; ++x) {
    const elem_t y = w.mapping[x];
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      if (w.mapping[a.mul(x, y)] != b.mul(w.mapping[x], w.mapping[y])) return false;
  return true;
}

namespace {

std::vector<int> centralizer_sizes(const FiniteGroup& g) {
  std::vector<int> out(g.order());
  for (elem_t x = 0; x < g.order(); ++x) {
    int c = 0;
    for (elem_t y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c;
    out[x] = c;
  }
  return out;
}

/// Greedy generating sequence: repeatedly the largest-order element outside
/// the current span (ties broken by smallest index).
std::vector<elem_t> generating_sequence(const FiniteGroup& g) {
  std::vector<elem_t> gens;
  std::vector<elem_t> span{g.identity()};
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  while (static_cast<int>(span.size()) < g.order()) {
    elem_t best = -1;
    for (elem_t x = 0; x < g.order(); ++x)
      if (!in[x] && (best < 0 || g.element_order(x) > g.element_order(best))) best = x;
    gens.push_back(best);
    std::vector<elem_t> seed = span;
    seed.push_back(best);
    span = close_under_product(g, seed);
    std::fill(in.begin(), in.end(), 0);
    for (elem_t x : span) in[x] = 1;
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  const std::function<bool(const IsomorphismWitness&)>& visit;
  std::vector<elem_t> gens;
  std::vector<std::vector<elem_t>> candidates;
  std::vector<int> cs_a, cs_b;
  std::vector<elem_t> map;   // a elem -> b elem or -1
  std::vector<char> used;    // b side
  std::vector<elem_t> dom;   // mapped a elements, discovery order
  bool stopped = false;

  IsoSearch(const FiniteGroup& a_, const FiniteGroup& b_,
            const std::function<bool(const IsomorphismWitness&)>& v)
      : a(a_), b(b_), visit(v) {}

  bool assign(elem_t x, elem_t y) {
    if (map[x] >= 0) return map[x] == y;
    if (used[y]) return false;
    if (a.element_order(x) != b.element_order(y)) return false;
    if (cs_a[x] != cs_b[y]) return false;
    map[x] = y;
    used[y] = 1;
    dom.push_back(x);
    return true;
  }

  /// Extends the partial map by the products of all pairs touching the
  /// elements added since old_size. Returns false on any inconsistency.
  bool close_from(std::size_t old_size) {
    for (std::size_t i = old_size; i < dom.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const elem_t x1 = dom[i], x2 = dom[j];
        if (!assign(a.mul(x1, x2), b.mul(map[x1], map[x2]))) return false;
        if (!assign(a.mul(x2, x1), b.mul(map[x2], map[x1]))) return false;
      }
    return true;
  }

  void rollback(std::size_t old_size) {
    for (std::size_t i = old_size; i < dom.size(); ++i) {
      used[map[dom[i]]] = 0;
      map[dom[i]] = -1;
    }
    dom.resize(old_size);
  }

  void search(std::size_t depth) {
    if (stopped) return;
    if (depth == gens.size()) {
      if (static_cast<int>(dom.size()) != a.order())
        throw InvariantViolation("isomorphism search closed over a proper subgroup");
      IsomorphismWitness w{map};
      if (!verify_isomorphism(a, b, w))
        throw InvariantViolation("isomorphism search produced an invalid witness");
      if (visit(w)) stopped = true;
      return;
    }
    const elem_t g = gens[depth];
    for (elem_t h : candidates[depth]) {
      const std::size_t old_size = dom.size();
      if (assign(g, h) && close_from(old_size)) {
        search(depth + 1);
        if (stopped) return;
      }
      rollback(old_size);
    }
  }
};

}  // namespace

bool for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                          const std::function<bool(const IsomorphismWitness&)>& visit) {
  if (a.order() != b.order()) return false;
  // Order multisets must agree; cheap global refutation.
  std::vector<int> oa = a.element_orders(), ob = b.element_orders();
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;

  IsoSearch s(a, b, visit);
  s.cs_a = centralizer_sizes(a);
  s.cs_b = centralizer_sizes(b);
  {
    std::vector<int> ca = s.cs_a, cb = s.cs_b;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  s.gens = generating_sequence(a);
  s.candidates.resize(s.gens.size());
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    const elem_t g = s.gens[i];
    for (elem_t h = 0; h < b.order(); ++h)
      if (a.element_order(g) == b.element_order(h) && s.cs_a[g] == s.cs_b[h])
        s.candidates[i].push_back(h);
    if (s.candidates[i].empty()) return false;
  }
  s.map.assign(a.order(), -1);
  s.used.assign(b.order(), 0);
  if (!s.assign(a.identity(), b.identity()))
    throw InvariantViolation("identity assignment failed");
  s.search(0);
  return s.stopped;
}

std::optional<IsomorphismWitness> is_isomorphic(const FiniteGroup& a,
                                                const FiniteGroup& b,
                                                const Limits& lim) {
  if (a.order() > lim.iso_cap || b.order() > lim.iso_cap)
    throw CapExceeded("is_isomorphic: order exceeds isomorphism cap " +
                      std::to_string(lim.iso_cap));
  std::optional<IsomorphismWitness> found;
  for_each_isomorphism(a, b, [&](const IsomorphismWitness& w) {
    found = w;
    return true;
  });
  return found;
}

CommutatorPairing commutator_pairing(const FiniteGroup& g) {
  CommutatorPairing cp;
  const Subgroup z = center(g);
  QuotientResult q = quotient(g, z);
  cp.quotient = std::move(q.group);
  cp.projection = std::move(q.projection);
  cp.derived = derived_subgroup(g);
  EmbeddedGroup eg = as_group(g, cp.derived);
  cp.derived_group = std::move(eg.group);
  cp.derived_to_parent = eg.to_parent;
  const std::vector<elem_t>& from_parent = eg.from_parent;

  const int m = cp.quotient.order();
  // First and (where the coset has one) second representative per coset,
  // by ascending element index.
  std::vector<elem_t> rep1(m, -1), rep2(m, -1);
  for (elem_t x = 0; x < g.order(); ++x) {
    const elem_t c = cp.projection[x];
    if (rep1[c] < 0) rep1[c] = x;
    else if (rep2[c] < 0) rep2[c] = x;
  }

  auto pair_value = [&](elem_t r, elem_t s) {
    const elem_t c = g.commutator(r, s);
    const elem_t idx = from_parent[c];
    if (idx < 0)
      throw InvariantViolation("commutator lies outside the derived subgroup");
    return idx;
  };

  cp.pairing.assign(m, std::vector<elem_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const elem_t v = pair_value(rep1[x], rep1[y]);
      // Representative independence, re-derived from the alternates.
      for (elem_t rx : {rep1[x], rep2[x]})
        for (elem_t ry : {rep1[y], rep2[y]}) {
          if (rx < 0 || ry < 0) continue;
          if (pair_value(rx, ry) != v)
            throw InvariantViolation("commutator pairing is not well-defined");
        }
      cp.pairing[x][y] = v;
    }
  return cp;
}

bool verify_isoclinism(const CommutatorPairing& pg, const CommutatorPairing& ph,
                       const IsoclinismWitness& w) {
  if (!verify_isomorphism(pg.quotient, ph.quotient, w.phi)) return false;
  if (!verify_isomorphism(pg.derived_group, ph.derived_group, w.psi)) return false;
  const int m = pg.quotient.order();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (w.psi.mapping[pg.pairing[x][y]] !=
          ph.pairing[w.phi.mapping[x]][w.phi.mapping[y]])
        return false;
  return true;
}

namespace {

/// The compatibility condition forces psi on every commutator value. Builds
/// that partial map; returns nullopt when it is already inconsistent
/// (not single-valued, not injective, or order-breaking), in which case no
/// compatible psi exists for this phi.
std::optional<std::vector<elem_t>> forced_psi(const CommutatorPairing& pg,
                                              const CommutatorPairing& ph,
                                              const IsomorphismWitness& phi) {
  const int m = pg.quotient.order();
  const int d = pg.derived_group.order();
  std::vector<elem_t> partial(d, -1);
  std::vector<char> hit(d, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const elem_t s = pg.pairing[x][y];
      const elem_t t = ph.pairing[phi.mapping[x]][phi.mapping[y]];
      if (partial[s] >= 0) {
        if (partial[s] != t) return std::nullopt;
        continue;
      }
      if (hit[t]) return std::nullopt;
      if (pg.derived_group.element_order(s) != ph.derived_group.element_order(t))
        return std::nullopt;
      partial[s] = t;
      hit[t] = 1;
    }
  return partial;
}

bool compatible(const CommutatorPairing& pg, const CommutatorPairing& ph,
                const IsomorphismWitness& phi, const IsomorphismWitness& psi) {
  const int m = pg.quotient.order();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (psi.mapping[pg.pairing[x][y]] !=
          ph.pairing[phi.mapping[x]][phi.mapping[y]])
        return false;
  return true;
}

}  // namespace

IsoclinismResult find_isoclinism_prepared(const CommutatorPairing& pg,
                                          const CommutatorPairing& ph,
                                          const Limits& lim) {
  IsoclinismResult res;
  const int qg = pg.quotient.order(), qh = ph.quotient.order();
  const int dg = pg.derived_group.order(), dh = ph.derived_group.order();
  if (qg != qh) {
    res.verdict = IsoVerdict::Refuted;
    res.reason = "central quotient orders differ (" + std::to_string(qg) + " vs " +
                 std::to_string(qh) + ")";
    return res;
  }
  if (dg != dh) {
    res.verdict = IsoVerdict::Refuted;
    res.reason = "derived subgroup orders differ (" + std::to_string(dg) + " vs " +
                 std::to_string(dh) + ")";
    return res;
  }
  if (qg > lim.iso_cap || dg > lim.iso_cap) {
    res.verdict = IsoVerdict::Inconclusive;
    res.reason = "order exceeds isomorphism cap (" +
                 std::to_string(std::max(qg, dg)) + " > " +
                 std::to_string(lim.iso_cap) + ")";
    return res;
  }

  bool any_phi = false;
  std::optional<IsoclinismWitness> witness;
  for_each_isomorphism(pg.quotient, ph.quotient, [&](const IsomorphismWitness& phi) {
    any_phi = true;
    const auto partial = forced_psi(pg, ph, phi);
    if (!partial) return false;  // no psi can satisfy this phi
    const bool total =
        std::none_of(partial->begin(), partial->end(), [](elem_t v) { return v < 0; });
    if (total) {
      // Commutator values cover the derived subgroup, so the forced map is
      // the only candidate.
      IsomorphismWitness psi{*partial};
      if (verify_isomorphism(pg.derived_group, ph.derived_group, psi) &&
          compatible(pg, ph, phi, psi)) {
        witness = IsoclinismWitness{phi, psi};
        return true;
      }
      return false;
    }
    const bool found = for_each_isomorphism(
        pg.derived_group, ph.derived_group, [&](const IsomorphismWitness& psi) {
          for (int i = 0; i < dg; ++i)
            if ((*partial)[i] >= 0 && psi.mapping[i] != (*partial)[i]) return false;
          if (!compatible(pg, ph, phi, psi)) return false;
          witness = IsoclinismWitness{phi, psi};
          return true;
        });
    return found;
  });

  if (witness) {
    if (!verify_isoclinism(pg, ph, *witness))
      throw InvariantViolation("isoclinism search produced an invalid witness");
    res.verdict = IsoVerdict::Witness;
    res.witness = std::move(witness);
    res.reason = "compatible isomorphism pair found";
    return res;
  }
  res.verdict = IsoVerdict::Refuted;
  res.reason = any_phi ? "exhausted all isomorphism pairs without a compatible one"
                       : "central quotients are not isomorphic";
  return res;
}

IsoclinismResult find_isoclinism(const FiniteGroup& g, const FiniteGroup& h,
                                 const Limits& lim) {
  const int zg = center(g).order(), zh = center(h).order();
  const int dg = derived_subgroup(g).order(), dh = derived_subgroup(h).order();
  const int qg = g.order() / zg, qh = h.order() / zh;
  IsoclinismResult res;
  if (qg != qh) {
    res.verdict = IsoVerdict::Refuted;
    res.reason = "central quotient orders differ (" + std::to_string(qg) + " vs " +
                 std::to_string(qh) + ")";
    return res;
  }
  if (dg != dh) {
    res.verdict = IsoVerdict::Refuted;
    res.reason = "derived subgroup orders differ (" + std::to_string(dg) + " vs " +
                 std::to_string(dh) + ")";
    return res;
  }
  if (qg > lim.iso_cap || dg > lim.iso_cap) {
    res.verdict = IsoVerdict::Inconclusive;
    res.reason = "order exceeds isomorphism cap (" +
                 std::to_string(std::max(qg, dg)) + " > " +
                 std::to_string(lim.iso_cap) + ")";
    return res;
  }
  const CommutatorPairing pg = commutator_pairing(g);
  const CommutatorPairing ph = commutator_pairing(h);
  return find_isoclinism_prepared(pg, ph, lim);
}

}  // namespace centlab
