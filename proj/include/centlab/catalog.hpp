#pragma once

#include <string>
#include <vector>

#include "centlab/centralizers.hpp"
#include "centlab/group.hpp"
#include "centlab/group_spec.hpp"

namespace centlab {

/// Specs of the direct products included in the default catalog. A
/// products file (one spec per line, '#' comments) can replace this list.
std::vector<std::string> default_product_specs();

struct CatalogOptions {
  int max_order = 120;
  /// Drop later entries isomorphic to an earlier one (named groups first,
  /// so S3 survives its dihedral twin). Pairs over the isomorphism cap are
  /// conservatively kept.
  bool dedup_isomorphic = true;
  std::vector<std::string> product_specs = default_product_specs();
  Limits limits;
};

struct CatalogEntry {
  GroupSpec spec;
  std::string label;  // equals spec.render()
  FiniteGroup group;
  CentStats stats;
  CpoVerdict cpo;
};

/// Deterministic catalog: the named groups S3, S4, A4, A5, Q8, D8; all
/// cyclic groups; dihedral groups of every even order; the nonabelian
/// group of order pq for every prime pair p > q with q | p-1; the
/// configured direct products; PGL(2,7) when max_order >= 336. Everything
/// is filtered to order <= max_order.
std::vector<CatalogEntry> build_catalog(const CatalogOptions& opts = {});

struct CounterexampleReport {
  CatalogEntry left;
  CatalogEntry right;
  int shared_cent_count = 0;
  int shared_derived_order = 0;
  /// Fast-refutation reason or exhaustion certificate from the search.
  std::string refutation;
};

struct InconclusivePair {
  std::string left_label;
  std::string right_label;
  std::string reason;
};

struct SearchResult {
  std::vector<CounterexampleReport> reports;
  std::vector<InconclusivePair> inconclusive;
  /// Labels of pairs where an isoclinism witness was found.
  std::vector<std::pair<std::string, std::string>> isoclinic_pairs;
  int buckets = 0;
  int pairs_examined = 0;
};

/// Buckets the catalog by (cent_count, derived order) and decides
/// isoclinism for every pair in a bucket. Refuted pairs become reports,
/// re-verified from scratch before being emitted; Inconclusive pairs are
/// listed separately and never counted as counterexamples. Reports are
/// sorted by (cent count, derived order, left label, right label).
SearchResult search_counterexamples(const std::vector<CatalogEntry>& catalog,
                                    const Limits& lim = {});

struct FamilyResult {
  bool applicable = false;
  int p = 0;
  /// Strict mode: the two primes with p-1 = q*r (descending). Relaxed
  /// mode: every prime divisor of p-1 (descending).
  std::vector<int> complements;
  /// semidirect_cyclic(p, q) entries matching complements.
  std::vector<CatalogEntry> members;
  std::string reason;
};

/// For p prime with p-1 = q*r a product of two distinct primes, the pair
/// of nonabelian groups of order pq and pr: both have prime-order
/// centralizers, cent count p+2, and derived order p (re-verified; an
/// InvariantViolation would flag a library bug). With relaxed = true the
/// family instead spans every prime divisor of p-1.
FamilyResult cpo_pair_family(int p, bool relaxed = false, const Limits& lim = {});

struct CheckResult {
  std::string name;
  bool pass = true;
  int checked = 0;
  std::vector<std::string> failures;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs every structural law the library exposes as a sweep over the
/// catalog: centralizer-count facts, the prime-centralizer classification
/// and its consequences (solvability, Fitting structure, heredity,
/// Frobenius shape, counting laws), quotient centralizer-count equalities,
/// Sylow congruences, and the isoclinism/cent-count implication on a small
/// subcatalog. Failures carry the offending group's label.
VerificationReport verify_catalog(const std::vector<CatalogEntry>& catalog,
                                  const Limits& lim = {});

}  // namespace centlab
