#pragma once

// Fundamental group of a bound quiver presentation (Q, I).
//
// Two parallel paths are homotopic when they appear together in a minimal
// relation: an element sum(c_i w_i) of the ideal such that no proper
// nonempty sub-sum stays in the ideal. The fundamental group of the
// presentation is pi_1 of the underlying graph of Q modulo the normal
// closure of the walks w_i w_j^{-1} over all such pairs. It genuinely
// depends on the chosen relation generators, not just on the algebra, so
// everything here speaks about one presentation at a time.
//
// pi_1 of the graph is free on the chords of a spanning tree; a closed walk
// maps to its chord word. The resulting finite presentation is handed to a
// Tietze simplifier whose verdict is honest: "trivial" and "free(n)" are
// only reported when reached by isomorphism-preserving moves, everything
// else is "unknown" together with the abelianization invariants.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "quiverworks/algebra.hpp"

namespace qw {

// Unordered pair of parallel paths extracted from one minimal relation.
struct HomotopyPair {
  Path a, b;
};

struct HomotopyRelationSet {
  std::vector<HomotopyPair> pairs;  // deduplicated, deterministic order
};

// Decomposes every relation generator into minimal relations by exact
// ideal-membership tests (smallest sub-sums first) and collects the pairs of
// paths of each minimal relation with at least two terms. Monomial relations
// contribute nothing. Throws DomainError("RelationTooLarge") past 16 terms.
HomotopyRelationSet minimal_relation_pairs(const AlgebraBasis& alg);

// Words over generators: letter k > 0 is generator k-1, k < 0 its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

// Generators: chords of a BFS spanning tree rooted at the basepoint (arrows
// scanned in input order). Relators: chord words of w_i w_j^{-1} over the
// homotopy pairs, freely reduced. Throws DomainError("Disconnected").
GroupPresentation pi1_presentation(const AlgebraBasis& alg,
                                   const std::string& basepoint);

// Invariant factors of the abelianized presentation (Smith normal form of
// the exponent matrix over Z, exact).
struct Abelianization {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // factors > 1, each dividing the next
  bool operator==(const Abelianization&) const = default;
  std::string str() const;  // "0", "Z", "Z^2 + Z/4", ...
};
Abelianization abelianization(const GroupPresentation& gp);

struct GroupVerdict {
  enum class Kind { trivial, free_group, unknown };
  Kind kind = Kind::unknown;
  int rank = 0;       // populated for free_group
  Abelianization ab;  // always populated
  std::string str() const;  // "trivial", "free(2)", "unknown(ab = Z/3)"
};

// Iterated Tietze moves: free and cyclic reduction, deduplication up to
// rotation and inversion, elimination of generators that occur exactly once
// in some relator. Group triviality is undecidable in general, so "unknown"
// is a legitimate verdict. When `trace` is given it receives a snapshot
// after every individual move, so soundness is testable: each move must
// preserve the abelianization invariants.
GroupVerdict simplify_group(const GroupPresentation& gp,
                            std::vector<GroupPresentation>* trace = nullptr);

}  // namespace qw
