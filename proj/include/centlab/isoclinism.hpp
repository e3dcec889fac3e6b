#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "centlab/group.hpp"

namespace centlab {

/// A bijection witnessing a ≅ b: mapping[x] is the image in b of element x
/// of a. Witnesses returned by the search are exhaustively re-verified.
struct IsomorphismWitness {
  std::vector<elem_t> mapping;
};

/// True iff mapping is a bijective homomorphism (checked on all pairs).
bool verify_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                        const IsomorphismWitness& w);

/// Enumerates every isomorphism a -> b by backtracking over images of a
/// greedy generating sequence (largest element order first), pruning by
/// element order and centralizer size. visit returning true stops the
/// enumeration; the return value says whether it was stopped.
/// No cap is applied here; callers gate on Limits::iso_cap.
bool for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                          const std::function<bool(const IsomorphismWitness&)>& visit);

/// Finds one isomorphism or proves there is none by exhaustion.
/// Throws CapExceeded when either order exceeds lim.iso_cap.
std::optional<IsomorphismWitness> is_isomorphic(const FiniteGroup& a,
                                                const FiniteGroup& b,
                                                const Limits& lim = {});

/// The commutator map of a group, tabulated on its central quotient:
/// pairing[x][y] is the index *in the re-indexed derived subgroup* of
/// [g1, g2] for any representatives g1, g2 of cosets x, y.
/// Representative-independence is verified on construction using a second
/// representative per coset where available.
struct CommutatorPairing {
  FiniteGroup quotient;                   // G/Z(G)
  std::vector<elem_t> projection;         // parent elem -> coset index
  Subgroup derived;                       // G' in parent coordinates
  FiniteGroup derived_group;              // G' re-indexed
  std::vector<elem_t> derived_to_parent;  // derived index -> parent elem
  std::vector<std::vector<elem_t>> pairing;
};

CommutatorPairing commutator_pairing(const FiniteGroup& g);

/// phi maps G/Z(G) to H/Z(H); psi maps G' to H'. Compatible when
/// psi(pairing_G(x,y)) = pairing_H(phi(x), phi(y)) for all coset pairs.
struct IsoclinismWitness {
  IsomorphismWitness phi;
  IsomorphismWitness psi;
};

/// Full independent check of an isoclinism witness: both maps are
/// isomorphisms and the compatibility square commutes on every pair.
bool verify_isoclinism(const CommutatorPairing& pg, const CommutatorPairing& ph,
                       const IsoclinismWitness& w);

enum class IsoVerdict { Witness, Refuted, Inconclusive };

struct IsoclinismResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::optional<IsoclinismWitness> witness;
  /// Fast-refutation reason, exhaustion certificate, or cap description.
  std::string reason;
};

/// Decides isoclinism by certificate search. Fast refutations on quotient
/// and derived orders come first; otherwise all quotient isomorphisms are
/// enumerated and checked for a compatible derived-subgroup isomorphism.
/// Size caps yield Inconclusive, never Refuted.
IsoclinismResult find_isoclinism(const FiniteGroup& g, const FiniteGroup& h,
                                 const Limits& lim = {});

/// Same search on pre-built pairings (used by the catalog scan, which
/// caches pairings per entry).
IsoclinismResult find_isoclinism_prepared(const CommutatorPairing& pg,
                                          const CommutatorPairing& ph,
                                          const Limits& lim = {});

}  // namespace centlab
