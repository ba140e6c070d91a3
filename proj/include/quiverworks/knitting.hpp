#pragma once

// Knitting of Auslander-Reiten components.
//
// Starting from the indecomposable projectives, the component is grown one
// mesh at a time. Nothing is guessed combinatorially: the end of each mesh
// is ar_translate_inverse of its start, the middle is the honest middle term
// of the almost split sequence, decomposed into indecomposables, and every
// summand is matched against the vertices already placed by an explicit
// isomorphism test. Radicals of projectives are expanded the same way, so
// irreducible maps into projectives carry the right multiplicities. The
// bookkeeping only tops up arrow counts, which makes the procedure
// insensitive to the order in which adjacent meshes are discovered.
//
// If the component closes below the caps the result is the entire
// Auslander-Reiten quiver of the algebra (a finite component of a connected
// algebra is all of it). Otherwise knitting stops at a cap and the vertices
// whose neighbourhood was left unexplored are flagged as boundary, giving a
// window in the sense of translation_quiver.hpp.

#include <memory>
#include <string>
#include <vector>

#include "quiverworks/representation.hpp"
#include "quiverworks/translation_quiver.hpp"

namespace qw {

struct KnitCaps {
  int max_vertices = 64;     // stop before placing more modules than this
  int max_total_dim = 4096;  // budget for the sum of all module dimensions
};

struct KnitResult {
  TranslationQuiver tq;
  std::vector<Representation> modules;  // by tq vertex id
  bool closed = false;                  // the component is finite and complete
  std::string stop_reason;              // "closed", "vertex cap", "dimension cap"
};

// Knit the components reachable from the seed projectives; `seeds` lists
// algebra vertices (empty = every vertex), so a single component of a
// representation-infinite algebra can be targeted. Throws
// DomainError("NoSeed") when nothing is seeded and
// DomainError("MeshMismatch") if the emitted meshes ever disagree with each
// other (which would mean the matching of summands went wrong).
KnitResult knit_component(std::shared_ptr<const AlgebraBasis> alg,
                          const KnitCaps& caps = {},
                          const std::vector<std::string>& seeds = {});
KnitResult knit_component(const AlgebraPresentation& pres, const KnitCaps& caps = {},
                          const std::vector<std::string>& seeds = {});

// All indecomposables of a representation-finite algebra, in knit order,
// pairwise non-isomorphic. Throws DomainError("NotRepresentationFinite") if
// knitting is still open after `cap` modules.
std::vector<Representation> enumerate_indecomposables(const AlgebraPresentation& pres,
                                                      int cap = 64);

}  // namespace qw
