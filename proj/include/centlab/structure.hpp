#pragma once

#include <optional>
#include <vector>

#include "centlab/group.hpp"

namespace centlab {

/// Subgroup generated by gens (closure under multiplication; the identity
/// is always included).
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<elem_t>& gens);

/// Elements commuting with everything.
Subgroup center(const FiniteGroup& g);

/// Subgroup generated by all commutators a^-1 b^-1 a b.
Subgroup derived_subgroup(const FiniteGroup& g);

/// Derived subgroup of a subgroup, in the ambient group's indexing.
Subgroup derived_of(const FiniteGroup& g, const Subgroup& h);

/// Derived series reaches the trivial subgroup.
bool is_solvable(const FiniteGroup& g);

/// Every Sylow subgroup is normal (finite-group characterization).
bool is_nilpotent(const FiniteGroup& g);

/// derived_subgroup(g) is the whole group.
bool is_perfect(const FiniteGroup& g);

struct SylowInfo {
  int p = 0;
  /// Full p-part of the group order.
  int prime_power = 1;
  /// One representative Sylow p-subgroup.
  Subgroup sylow;
  /// Number of Sylow p-subgroups.
  int count = 0;
  /// All conjugates of the representative, sorted canonically.
  std::vector<Subgroup> all;
};

/// Sylow p-subgroup data. The representative is grown from a cyclic
/// p-subgroup: while it is smaller than the p-part, it is extended inside
/// its own normalizer by an element giving a strictly larger p-subgroup.
/// Throws InvalidParameter when p does not divide the order.
SylowInfo sylow(const FiniteGroup& g, int p);

/// Largest normal p-subgroup, computed as the intersection of all Sylow
/// p-conjugates.
Subgroup o_p(const FiniteGroup& g, int p);

/// Fitting subgroup: product of o_p over the primes dividing the order.
/// Nilpotency of the result is asserted.
Subgroup fitting(const FiniteGroup& g);

/// Every subgroup, found by closing the set of cyclic subgroups under
/// pairwise joins. Sorted by (order, elements). Requires
/// order <= lim.lattice_cap, else CapExceeded.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& lim = {});

bool is_normal(const FiniteGroup& g, const Subgroup& h);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& lim = {});

struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
};

/// Kernel-side detection: a nontrivial proper normal N with C_G(x) ⊆ N for
/// every non-identity x in N, paired with a complement H (N ∩ H trivial,
/// |N||H| = |G|). Returns the decomposition with the smallest kernel
/// (ties by element array), or nullopt.
std::optional<FrobeniusDecomposition> frobenius_decomposition(const FiniteGroup& g,
                                                              const Limits& lim = {});

/// Distinct primes dividing the order, ascending.
std::vector<int> prime_divisors(const FiniteGroup& g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool subgroup_subset(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, elem_t x);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

}  // namespace centlab
