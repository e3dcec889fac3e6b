#include "centlab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "centlab/numeric.hpp"

namespace centlab {

namespace {

void check_cap(std::int64_t order, const Limits& lim, const std::string& what) {
  if (order > lim.table_cap)
    throw CapExceeded(what + ": order " + std::to_string(order) +
                      " exceeds table cap " + std::to_string(lim.table_cap));
}

}  // namespace

bool Subgroup::contains(elem_t e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  Subgroup s;
  s.elems.resize(g.order());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

elem_t FiniteGroup::power(elem_t a, int k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  elem_t r = identity_;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

void FiniteGroup::compute_structure() {
  const int n = n_;
  // Identity: the unique e with e*b = b and a*e = a for all a, b.
  elem_t id = -1;
  for (elem_t e = 0; e < n; ++e) {
    bool ok = true;
    for (elem_t b = 0; b < n && ok; ++b)
      if (mul(e, b) != b || mul(b, e) != b) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw NotAGroup("no two-sided identity element");
  identity_ = id;

  inverse_.assign(n, -1);
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t x = 0; x < n; ++x) {
      if (mul(a, x) == id) {
        if (mul(x, a) != id)
          throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
        inverse_[a] = x;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }

  element_order_.assign(n, 0);
  for (elem_t a = 0; a < n; ++a) {
    elem_t x = a;
    int k = 1;
    while (x != id) {
      x = mul(x, a);
      if (++k > n)
        throw NotAGroup("element " + std::to_string(a) + " generates no finite cycle");
    }
    if (n % k != 0)
      throw NotAGroup("order of element " + std::to_string(a) +
                      " does not divide the group order");
    element_order_[a] = k;
  }

  abelian_ = true;
  for (elem_t a = 0; a < n && abelian_; ++a)
    for (elem_t b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

FiniteGroup FiniteGroup::from_trusted_table(int n, std::vector<elem_t> flat,
                                            std::string label) {
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.label_ = std::move(label);
  g.compute_structure();
  return g;
}

void FiniteGroup::validate(const Limits& lim) const {
  const int n = n_;
  if (n < 1) throw NotAGroup("empty table");
  if (table_.size() != static_cast<std::size_t>(n) * n)
    throw NotAGroup("table is not square");
  for (elem_t v : table_)
    if (v < 0 || v >= n) throw NotAGroup("table entry out of range");

  // Latin square: each row and each column is a permutation of 0..n-1.
  std::vector<char> seen(n);
  for (elem_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (elem_t b = 0; b < n; ++b) {
      elem_t v = mul(a, b);
      if (seen[v])
        throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (elem_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (elem_t a = 0; a < n; ++a) {
      elem_t v = mul(a, b);
      if (seen[v])
        throw NotAGroup("column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }

  auto assoc_fail = [&](elem_t a, elem_t b, elem_t c) {
    return NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64 || lim.exhaustive_validation) {
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b) {
        const elem_t ab = mul(a, b);
        for (elem_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) throw assoc_fail(a, b, c);
      }
  } else {
    std::mt19937_64 rng(lim.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const std::int64_t samples = 10LL * n * n;
    for (std::int64_t i = 0; i < samples; ++i) {
      const elem_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw assoc_fail(a, b, c);
    }
  }
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<elem_t>>& rows,
                                           std::string label, const Limits& lim) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw NotAGroup("empty table");
  check_cap(n, lim, "from_cayley_table");
  std::vector<elem_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (elem_t v : row) {
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
      flat.push_back(v);
    }
  }
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.label_ = label.empty() ? "table" + std::to_string(n) : std::move(label);
  g.validate(lim);
  g.compute_structure();
  return g;
}

FiniteGroup cyclic(int n, const Limits& lim) {
  if (n < 1) throw InvalidParameter("cyclic: order must be >= 1");
  check_cap(n, lim, "cyclic");
  std::vector<elem_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::from_trusted_table(n, std::move(t), "Z" + std::to_string(n));
}

FiniteGroup dihedral(int two_n, const Limits& lim) {
  if (two_n < 2 || two_n % 2 != 0)
    throw InvalidParameter("dihedral: order must be a positive even integer");
  check_cap(two_n, lim, "dihedral");
  const int n = two_n / 2;
  const int sz = two_n;
  std::vector<elem_t> t(static_cast<std::size_t>(sz) * sz);
  auto at = [&](int a, int b) -> elem_t& { return t[static_cast<std::size_t>(a) * sz + b]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(i, j) = (i + j) % n;                      // r^i r^j
      at(i, n + j) = n + ((j - i) % n + n) % n;    // r^i (s r^j) = s r^(j-i)
      at(n + i, j) = n + (i + j) % n;              // (s r^i) r^j = s r^(i+j)
      at(n + i, n + j) = ((j - i) % n + n) % n;    // (s r^i)(s r^j) = r^(j-i)
    }
  return FiniteGroup::from_trusted_table(sz, std::move(t), "D" + std::to_string(two_n));
}

namespace {

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool perm_is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup from_permutations(std::vector<std::vector<int>> perms, std::string label) {
  std::sort(perms.begin(), perms.end());
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  const int deg = static_cast<int>(perms[0].size());
  std::vector<elem_t> t(static_cast<std::size_t>(n) * n);
  std::vector<int> comp(deg);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int k = 0; k < deg; ++k) comp[k] = perms[a][perms[b][k]];
      const auto it = index.find(comp);
      if (it == index.end())
        throw InvariantViolation("permutation set is not closed under composition");
      t[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  return FiniteGroup::from_trusted_table(n, std::move(t), std::move(label));
}

}  // namespace

FiniteGroup symmetric(int n, const Limits& lim) {
  if (n < 1) throw InvalidParameter("symmetric: degree must be >= 1");
  if (n > 7) throw CapExceeded("symmetric: degree above 7 unsupported");
  check_cap(factorial(n), lim, "symmetric");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(perms), "S" + std::to_string(n));
}

FiniteGroup alternating(int n, const Limits& lim) {
  if (n < 3) throw InvalidParameter("alternating: degree must be >= 3");
  if (n > 8) throw CapExceeded("alternating: degree above 8 unsupported");
  check_cap(factorial(n) / 2, lim, "alternating");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (perm_is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(perms), "A" + std::to_string(n));
}

FiniteGroup quaternion8(const Limits& lim) {
  check_cap(8, lim, "quaternion8");
  // Index = axis*2 + (1 if negative), axes 0..3 = 1, i, j, k.
  static const int axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<elem_t> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, bx = b / 2;
      const int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ax][bx];
      t[static_cast<std::size_t>(a) * 8 + b] = axis[ax][bx] * 2 + (s < 0 ? 1 : 0);
    }
  return FiniteGroup::from_trusted_table(8, std::move(t), "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& lim) {
  const std::int64_t n = static_cast<std::int64_t>(a.order()) * b.order();
  check_cap(n, lim, "direct_product");
  const int nb = b.order();
  const int sz = static_cast<int>(n);
  std::vector<elem_t> t(static_cast<std::size_t>(sz) * sz);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      t[static_cast<std::size_t>(x) * sz + y] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup::from_trusted_table(sz, std::move(t), a.label() + "x" + b.label());
}

FiniteGroup semidirect_cyclic(int p, int q, const Limits& lim) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw InvalidParameter("semidirect_cyclic: p and q must be distinct primes");
  if ((p - 1) % q != 0)
    throw InvalidParameter("semidirect_cyclic: q must divide p-1");
  const std::int64_t n64 = static_cast<std::int64_t>(p) * q;
  check_cap(n64, lim, "semidirect_cyclic");
  const int n = static_cast<int>(n64);
  const int g0 = smallest_primitive_root(p);
  const int t0 = static_cast<int>(pow_mod(g0, (p - 1) / q, p));
  std::vector<int> tpow(q);
  tpow[0] = 1;
  for (int i = 1; i < q; ++i) tpow[i] = static_cast<int>(static_cast<std::int64_t>(tpow[i - 1]) * t0 % p);
  // (x1,y1)(x2,y2) = (x1 + t^y1 * x2 mod p, y1 + y2 mod q); index = y*p + x.
  std::vector<elem_t> t(static_cast<std::size_t>(n) * n);
  for (int y1 = 0; y1 < q; ++y1)
    for (int x1 = 0; x1 < p; ++x1)
      for (int y2 = 0; y2 < q; ++y2)
        for (int x2 = 0; x2 < p; ++x2) {
          const int x = static_cast<int>((x1 + static_cast<std::int64_t>(tpow[y1]) * x2) % p);
          const int y = (y1 + y2) % q;
          t[static_cast<std::size_t>(y1 * p + x1) * n + (y2 * p + x2)] = y * p + x;
        }
  return FiniteGroup::from_trusted_table(
      n, std::move(t), "Z" + std::to_string(p) + ":Z" + std::to_string(q));
}

FiniteGroup pgl2(int q, const Limits& lim) {
  if (!is_prime(q) || q == 2)
    throw InvalidParameter("pgl2: q must be an odd prime (prime fields only)");
  const std::int64_t order = static_cast<std::int64_t>(q) * q * q - q;
  check_cap(order, lim, "pgl2");
  // Points of the projective line: 0..q-1 are [x:1], q is [1:0].
  std::vector<int> inv(q);
  for (int x = 1; x < q; ++x) inv[x] = static_cast<int>(pow_mod(x, q - 2, q));
  const int infinity = q;
  std::set<std::vector<int>> perms;
  std::vector<int> perm(q + 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if ((a * d - b * c) % q == 0) continue;
          for (int x = 0; x < q; ++x) {
            const int num = (a * x + b) % q;
            const int den = (c * x + d) % q;
            perm[x] = den == 0 ? infinity : num * inv[den] % q;
          }
          perm[infinity] = c == 0 ? infinity : a * inv[c] % q;
          perms.insert(perm);
        }
  if (static_cast<std::int64_t>(perms.size()) != order)
    throw InvariantViolation("pgl2: unexpected group order " +
                             std::to_string(perms.size()));
  std::vector<std::vector<int>> list(perms.begin(), perms.end());
  return from_permutations(std::move(list), "PGL(2," + std::to_string(q) + ")");
}

std::vector<elem_t> close_under_product(const FiniteGroup& g, const std::vector<elem_t>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<elem_t> elems;
  auto add = [&](elem_t e) {
    if (!in[e]) {
      in[e] = 1;
      elems.push_back(e);
    }
  };
  add(g.identity());
  for (elem_t e : seed) add(e);
  // Every ordered pair of current elements is eventually multiplied, so the
  // result is the subsemigroup generated, which in a finite group is the
  // generated subgroup.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

namespace {

bool is_closed(const FiniteGroup& g, const Subgroup& h) {
  for (elem_t a : h.elems)
    for (elem_t b : h.elems)
      if (!h.contains(g.mul(a, b))) return false;
  return h.contains(g.identity());
}

}  // namespace

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n, const Limits&) {
  if (!is_closed(g, n)) throw InvalidParameter("quotient: subset is not a subgroup");
  for (elem_t x = 0; x < g.order(); ++x)
    for (elem_t a : n.elems)
      if (!n.contains(g.conjugate(x, a)))
        throw NotNormal("quotient: subgroup is not normal");

  const int ncosets = g.order() / n.order();
  std::vector<elem_t> proj(g.order(), -1);
  std::vector<elem_t> reps;
  reps.reserve(ncosets);
  for (elem_t a = 0; a < g.order(); ++a) {
    if (proj[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (elem_t h : n.elems) proj[g.mul(a, h)] = c;
  }
  std::vector<elem_t> t(static_cast<std::size_t>(ncosets) * ncosets);
  for (int i = 0; i < ncosets; ++i)
    for (int j = 0; j < ncosets; ++j)
      t[static_cast<std::size_t>(i) * ncosets + j] = proj[g.mul(reps[i], reps[j])];
  QuotientResult out{FiniteGroup::from_trusted_table(
                         ncosets, std::move(t),
                         g.label() + "/N" + std::to_string(n.order())),
                     std::move(proj)};
  return out;
}

EmbeddedGroup as_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_closed(g, h)) throw InvalidParameter("as_group: subset is not a subgroup");
  const int k = h.order();
  std::vector<elem_t> from_parent(g.order(), -1);
  for (int i = 0; i < k; ++i) from_parent[h.elems[i]] = i;
  std::vector<elem_t> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t[static_cast<std::size_t>(i) * k + j] = from_parent[g.mul(h.elems[i], h.elems[j])];
  EmbeddedGroup out{FiniteGroup::from_trusted_table(
                        k, std::move(t), g.label() + "#sub" + std::to_string(k)),
                    h.elems, std::move(from_parent)};
  return out;
}

}  // namespace centlab
