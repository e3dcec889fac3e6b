#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "centlab/group.hpp"

namespace centlab {

/// C_G(x) = {y : yx = xy}, canonical form.
Subgroup centralizer(const FiniteGroup& g, elem_t x);

/// The set of distinct element centralizers of a group, with the derived
/// invariants the classification predicates read off it.
struct CentStats {
  /// Distinct C_G(x) over all x, sorted by (order, elements).
  std::vector<Subgroup> cent_set;
  int cent_count = 0;
  int center_order = 0;
  int derived_order = 0;
  /// Centralizer order -> multiplicity within cent_set.
  std::map<int, int> order_multiset;
};

CentStats cent_set(const FiniteGroup& g);

/// Distinct C_G(x) for x ranging over h only.
std::vector<Subgroup> cent_of_subgroup(const FiniteGroup& g, const Subgroup& h);

/// Which elements the prime-order-centralizer condition quantifies over.
/// NonTrivial is the working definition; NonCentral is the variant kept
/// behind a flag for comparison (it differs only on abelian groups, which
/// satisfy it vacuously).
enum class CpoMode { NonTrivial, NonCentral };

enum class CpoCase {
  /// |G| prime (every nontrivial centralizer is the whole group, of prime order).
  PrimeOrder,
  /// |G| = pq with p > q, q | p-1, fitting = derived of order p.
  PQCase,
  NotCpo,
  /// NonCentral mode only: abelian groups have no elements to test.
  Vacuous,
};

struct CpoVerdict {
  bool is_cpo = false;
  CpoCase kind = CpoCase::NotCpo;
  int p = 0;
  int q = 0;
  /// When NotCpo: first non-identity element whose centralizer order is
  /// composite (absent for the trivial group).
  std::optional<elem_t> witness;
};

/// Tests whether every non-trivial (or non-central) element has a
/// centralizer of prime order, and classifies positives by group order.
/// The trivial group is classified NotCpo. For composite positives the
/// structural facts (order pq, p > q, q | p-1, fitting = derived of order
/// p) are re-verified and an InvariantViolation is raised if they fail.
CpoVerdict is_cpo(const FiniteGroup& g, CpoMode mode = CpoMode::NonTrivial);

struct CnClass {
  int n = 0;
  /// "abelian" for n = 1; "C4" / "C5" for the small characterized classes.
  std::string tag;
};

CnClass cn_class(const FiniteGroup& g);

/// Centralizer-count laws for nonabelian groups with prime-order
/// centralizers: |Cent| equals (largest prime divisor) + 2 and is at least
/// (smallest prime divisor) + 3.
struct CentCountLaw {
  bool applicable = false;
  int largest_prime = 0;
  int smallest_prime = 0;
  int cent_count = 0;
  bool equals_largest_plus_two = false;
  bool at_least_smallest_plus_three = false;
};

CentCountLaw cpo_cent_count_law(const FiniteGroup& g);

}  // namespace centlab
