#pragma once

// Orbit graphs and Galois coverings of translation quivers.
//
// The orbit graph O(G) of a translation quiver G compresses G along its
// translation: vertices are the tau-orbits of non-periodic vertices together
// with one vertex per periodic component (a connected component of the full
// subquiver on the periodic vertices with an extra arrow x -> tau x for every
// periodic x, which also donates the single loop each such vertex carries),
// and there is one undirected edge per sigma-orbit of arrows, except that
// sigma-orbits running between two periodic vertices contribute nothing.
// The fundamental group of O(G) is isomorphic to the fundamental group of G,
// so tree tests and rank counts on O(G) answer simple-connectedness questions
// about G without any word-problem machinery.
//
// Covers are produced by voltages: assign a group element v(a) to every
// arrow. Lifting tau forces a balance condition at every mesh -- all paths
// tau z -> m -> z of the mesh at z must carry the same total voltage
// w_z = v(a) + v(sigma a) -- and then the derived translation quiver with
// vertices (x, g), arrows (y,g) -> (z, g + v(a)) and translation
// (z, h) -> (tau z, h - w_z) is a Galois cover with the regular action.
// Infinite groups are handled through finite layer windows whose rim is
// marked `boundary`.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverworks/translation_quiver.hpp"

namespace qw {

struct OrbitGraph {
  // One entry per orbit-graph vertex: the member vertex ids of the
  // underlying translation quiver, ascending. Vertices are ordered by their
  // smallest member, periodic components and tau-orbits interleaved.
  std::vector<std::vector<int>> members;
  std::vector<char> periodic;  // per orbit-graph vertex
  // One entry per sigma-orbit that contributes an edge (both endpoint
  // classes recorded as {min, max}; loops from the periodic rule are NOT
  // in this list).
  std::vector<std::pair<int, int>> edges;
  // One loop per periodic component, by orbit-graph vertex.
  std::vector<int> loops;

  int order() const { return static_cast<int>(members.size()); }
  int size() const { return static_cast<int>(edges.size() + loops.size()); }
  int orbit_of(int tq_vertex) const;  // -1 if out of range
  // Multiset of undirected edges including loops, sorted; equal multisets
  // mean equal graphs given equal vertex partitions.
  std::vector<std::pair<int, int>> edge_multiset() const;
};

// Build O(G). Requires a structurally valid translation quiver; windows are
// honored (boundary vertices have no translation, hence count as
// non-periodic and break tau-orbits at the rim).
OrbitGraph orbit_graph(const TranslationQuiver& tq);

// Human-readable one-line-per-vertex summary, deterministic.
std::string orbit_graph_summary(const OrbitGraph& og, const TranslationQuiver& tq);
// Graphviz form (undirected; the loop on a periodic component is drawn as a
// self-edge).
std::string export_dot(const OrbitGraph& og, const TranslationQuiver& tq);

struct Pi1Rank {
  int rank_h = 0;        // cycle rank of O(G): edges + loops - vertices + 1
  int rank_generic = 0;  // same after merging edges that come from parallel
                         // arrows of G (the generic-cover relation)
  bool is_tree = false;  // rank_h == 0 and no loops
};

// Throws DomainError("Disconnected") if G is not connected (arrows and tau
// links both count as connections).
Pi1Rank pi1_rank(const TranslationQuiver& tq);

// Generator of a cyclic group acting on a translation quiver: images of
// every vertex and every arrow under the generator.
struct DeckAction {
  std::vector<int> vertex_perm;
  std::vector<int> arrow_perm;
};

struct TQCoveringMorphism {
  TranslationQuiver total;      // the cover
  TranslationQuiver base;
  std::vector<int> vertex_map;  // total vertex -> base vertex
  std::vector<int> arrow_map;   // total arrow -> base arrow
  std::string group;            // "", "Z" or "Z/n"
  // Deck generator for finite cyclic covers; absent for windows of Z-covers
  // (the shift is only partially defined on a window).
  std::optional<DeckAction> deck;
};

// Derived translation quiver of a voltage assignment (absent arrows carry
// voltage 0). group is "Z" or "Z/n" with n >= 1; window is the number of
// layers kept for Z (ignored for Z/n). Throws DomainError("UnbalancedMesh")
// naming the offending vertex when the mesh balance fails, and
// DomainError("BadGroup") on an unparsable group.
TQCoveringMorphism voltage_cover_tq(const TranslationQuiver& base,
                                    const std::map<std::string, long>& voltage,
                                    const std::string& group, int window = 2);

// Orbit translation quiver of a free cyclic action. Throws
// DomainError("NotFree") when some power of the generator has a fixed
// vertex, DomainError("BrokenLift") when the data is not an automorphism of
// the translation quiver (arrow endpoints, flags or tau not preserved).
TranslationQuiver quotient_tq(const TranslationQuiver& total, const DeckAction& gen);

struct TQCoverReport {
  bool tau_commutes = false;     // pi tau = tau pi on interior cover vertices
  bool local_bijection = false;  // arrow fibres biject at interior vertices
  bool surjective = false;       // on vertices and arrows
  int fibre_size = 0;            // common vertex fibre cardinality (0: varies)
  // Galois certificate; meaningful when a deck generator is attached.
  bool deck_free = false;
  bool fibres_are_orbits = false;
  bool quotient_matches = false;  // quotient by the deck is isomorphic to base
  bool galois = false;            // all three above
  std::vector<std::string> notes;

  bool ok() const { return tau_commutes && local_bijection && surjective; }
};

// Check a covering morphism. Structural breakage -- arrow maps that do not
// commute with the vertex map, or a mesh collapsed so that the local arrow
// bijection at an interior vertex fails -- throws DomainError("BrokenLift");
// a non-free deck action throws DomainError("NotFree"). Softer properties
// are reported in the result.
TQCoverReport verify_tq_covering(const TQCoveringMorphism& pi);

// Exact isomorphism test of translation quivers (flags, arrows with
// multiplicity and tau all preserved). Backtracking with degree/flag
// invariants; intended for the window sizes that appear in fixtures.
bool tq_isomorphic(const TranslationQuiver& a, const TranslationQuiver& b);

}  // namespace qw
