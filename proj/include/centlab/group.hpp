#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centlab/errors.hpp"

namespace centlab {

/// Element of a finite group, identified by its index in [0, order).
using elem_t = int;

/// Size caps and validation knobs shared across the library.
///
/// table_cap bounds the order of any group materialized as a dense Cayley
/// table. lattice_cap bounds exhaustive subgroup-lattice enumeration.
/// iso_cap bounds isomorphism backtracking. seed drives the sampled
/// associativity check used for tables above the exhaustive threshold.
struct Limits {
  int table_cap = 400;
  int lattice_cap = 120;
  int iso_cap = 64;
  std::uint64_t seed = 0x5eedcafe;
  bool exhaustive_validation = false;
};

/// A finite group given by its complete multiplication table.
///
/// Immutable after construction. table stores a flattened n x n array with
/// mul(a, b) = table[a*n + b]. Instances built by the named constructors
/// below are correct by construction; tables from untrusted sources go
/// through from_cayley_table, which validates the group axioms.
class FiniteGroup {
 public:
  /// Empty placeholder (order 0); result structs default-construct through
  /// this before being filled.
  FiniteGroup() = default;

  /// Validates and wraps an n x n multiplication table. Checks: square
  /// shape, entries in range, Latin square, two-sided identity, two-sided
  /// inverses, associativity, and Lagrange on element orders.
  /// Associativity is exhaustive for n <= 64 (or when
  /// lim.exhaustive_validation is set) and sampled over 10*n*n seeded
  /// triples otherwise.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<elem_t>>& rows,
                                       std::string label = {},
                                       const Limits& lim = {});

  int order() const noexcept { return n_; }
  elem_t mul(elem_t a, elem_t b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  elem_t identity() const noexcept { return identity_; }
  elem_t inverse(elem_t a) const { return inverse_[a]; }
  int element_order(elem_t a) const { return element_order_[a]; }
  const std::vector<int>& element_orders() const noexcept { return element_order_; }
  bool is_abelian() const noexcept { return abelian_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  /// g a g^-1
  elem_t conjugate(elem_t g, elem_t a) const { return mul(mul(g, a), inverse(g)); }
  /// a^-1 b^-1 a b
  elem_t commutator(elem_t a, elem_t b) const {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }
  elem_t power(elem_t a, int k) const;

  /// Re-runs the full validation pass on the stored table. Used by tests;
  /// throws NotAGroup on failure.
  void validate(const Limits& lim = {}) const;

  /// Wraps a flattened table that is correct by construction (products of
  /// already-validated groups, coset tables, re-indexed subgroups). Runs
  /// the structural pass (identity, inverses, element orders) but skips the
  /// Latin-square and associativity scans.
  static FiniteGroup from_trusted_table(int n, std::vector<elem_t> flat,
                                        std::string label);

 private:
  void compute_structure();

  int n_ = 0;
  std::vector<elem_t> table_;
  elem_t identity_ = 0;
  std::vector<elem_t> inverse_;
  std::vector<int> element_order_;
  bool abelian_ = true;
  std::string label_;
};

/// A subgroup of some ambient group, stored as the sorted list of element
/// indices (canonical form: set equality is vector equality). The ambient
/// group is supplied explicitly to every operation that needs it.
struct Subgroup {
  std::vector<elem_t> elems;

  int order() const noexcept { return static_cast<int>(elems.size()); }
  bool contains(elem_t e) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool operator!=(const Subgroup& o) const { return elems != o.elems; }

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);
};

/// Z_n with table[a][b] = (a+b) mod n.
FiniteGroup cyclic(int n, const Limits& lim = {});

/// Dihedral group of ORDER two_n (D10 has order 10). Elements 0..n-1 are
/// the rotations r^i, elements n..2n-1 the reflections s r^(i-n), with
/// s r s = r^-1.
FiniteGroup dihedral(int two_n, const Limits& lim = {});

/// Symmetric group on n letters realized by enumerating permutations in
/// lexicographic order. Degree is hard-capped at 7.
FiniteGroup symmetric(int n, const Limits& lim = {});

/// Alternating group on n letters, n >= 3. Degree hard-capped at 8.
FiniteGroup alternating(int n, const Limits& lim = {});

/// The quaternion group {+-1, +-i, +-j, +-k}.
FiniteGroup quaternion8(const Limits& lim = {});

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const Limits& lim = {});

/// The nonabelian group Z_p x| Z_q for distinct primes with q | p-1.
/// The Z_q generator acts on Z_p by multiplication by t = g^((p-1)/q)
/// where g is the smallest primitive root mod p; any order-q action gives
/// an isomorphic group, so this canonical choice pins the table.
/// Element (x, y) has index y*p + x; the normal Z_p is indices 0..p-1.
FiniteGroup semidirect_cyclic(int p, int q, const Limits& lim = {});

/// PGL(2, q) for an odd prime q, realized by its faithful action on the
/// q+1 points of the projective line over F_q. Order q^3 - q.
FiniteGroup pgl2(int q, const Limits& lim = {});

struct QuotientResult {
  FiniteGroup group;
  /// Maps each parent element index to its coset index in the quotient.
  std::vector<elem_t> projection;
};

/// Quotient of g by a normal subgroup n. Cosets are indexed by ascending
/// smallest member, so the identity coset is index 0. Throws NotNormal if
/// n is not normal, InvalidParameter if n is not a subgroup.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n, const Limits& lim = {});

struct EmbeddedGroup {
  FiniteGroup group;
  /// New index -> parent element index (ascending).
  std::vector<elem_t> to_parent;
  /// Parent element index -> new index, or -1 outside the subgroup.
  std::vector<elem_t> from_parent;
};

/// Re-indexes a subgroup as a standalone FiniteGroup.
EmbeddedGroup as_group(const FiniteGroup& g, const Subgroup& h);

/// Closure of seed ∪ {identity} under multiplication, sorted.
std::vector<elem_t> close_under_product(const FiniteGroup& g, const std::vector<elem_t>& seed);

}  // namespace centlab
