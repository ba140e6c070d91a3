#pragma once

// Bound quiver algebras A = kQ/I presented by a quiver and a finite list of
// relations (uniform linear combinations of parallel paths of length >= 2).
//
// The basis computation is exact and certified. For a window size M we form
// the truncation kQ_{<M} / image(I): the image of the ideal is spanned by the
// truncations of p*r*q over relations r and all paths p, q short enough that
// some term survives, which is the full image because every discarded product
// has all terms of length >= M. If every path of length N = M-1 then reduces
// to zero, I + R^j stabilizes from j = N on and the computed algebra is
// exactly kQ/(I + R^N). When the ideal is admissible -- the standing
// assumption for bound quiver algebras -- this equals kQ/I, and the
// certificate witnesses R^N <= I. Presentations that never satisfy the
// certificate below the cap are reported as NotFiniteDimensional.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiverworks/linalg.hpp"
#include "quiverworks/quiver.hpp"

namespace qw {

struct AlgebraPresentation {
  Field field;
  Quiver quiver;
  std::vector<LinComb> relations;
  std::string name;  // optional label used by printers

  // Throws DomainError (RelationNotUniform, RelationTooShort, ZeroRelation)
  // unless every relation combines parallel paths of length >= 2.
  void check_relations() const;
};

class AlgebraBasis {
 public:
  // Compute a certified basis; cap bounds the window (longest considered
  // path length is cap-1). Throws NotFiniteDimensional past the cap.
  static AlgebraBasis compute(const AlgebraPresentation& pres, int cap = 24);

  const AlgebraPresentation& presentation() const { return *pres_; }
  const Field& field() const { return pres_->field; }
  const Quiver& quiver() const { return pres_->quiver; }

  int dim() const { return static_cast<int>(basis_.size()); }
  // Basis paths in degree-then-lex order (normal forms of the ideal span).
  const std::vector<Path>& basis_paths() const { return basis_; }
  const Path& basis_path(int i) const { return basis_.at(i); }
  int basis_index(const Path& p) const;  // -1 if p is not a basis path
  // All paths of length >= nil_degree() lie in the ideal.
  int nil_degree() const { return nil_degree_; }

  // Indices of basis paths from x to y (e_y A e_x), ascending.
  std::vector<int> pair_basis(int x, int y) const;
  // Indices of basis paths of length >= 1 (the radical; valid because the
  // relations are admissible-style, so the ideal sits inside rad^2).
  std::vector<int> radical_basis() const;

  // Normal form as coordinates over basis_paths(). Paths of length >=
  // nil_degree vanish; others must lie in the window.
  Vec coords(const LinComb& v) const;
  LinComb normal_form(const LinComb& v) const;
  bool in_ideal(const LinComb& v) const { return is_zero_vec(coords(v)); }

  // coords(basis_i * basis_j) with function-order product (j acts first);
  // zero vector when endpoints mismatch.
  Vec multiply(int i, int j) const;

  LinComb from_coords(const Vec& c) const;

 private:
  // Owned copy of the presentation (kept behind a pointer so AlgebraBasis
  // stays cheaply movable and iterators into the quiver remain valid).
  std::shared_ptr<const AlgebraPresentation> pres_;
  int window_ = 0;      // basis certified in kQ_{<window_}
  int nil_degree_ = 0;  // = window_ - 1
  std::vector<Path> all_paths_;          // every path of length < window_, ascending
  std::map<Path, int> path_pos_;         // position in all_paths_
  RowReducer ideal_{Field(), 0};         // span of the ideal image, columns descending
  std::vector<Path> basis_;              // non-pivot paths, ascending
  std::map<Path, int> basis_pos_;

  std::size_t col(const Path& p) const;  // descending column index
  Vec to_window_vec(const LinComb& v) const;
};

// Every path of the quiver with length <= maxlen, in degree-then-lex order.
std::vector<Path> enumerate_paths(const Quiver& q, int maxlen);

// The full subcategory presentation on a convex set of vertices: arrows and
// relation terms must stay inside the set. Throws DomainError("NotConvex")
// if some path leaves and re-enters the set, and RelationNotRestrictable if
// a relation mixes inside and outside terms.
AlgebraPresentation restrict_to_convex(const AlgebraPresentation& pres,
                                       const std::set<std::string>& vertices);

// Human-readable validation report (dimensions, per-pair bases, nil degree).
std::string validation_report(const AlgebraBasis& basis);

}  // namespace qw
