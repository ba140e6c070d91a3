#pragma once

// Finite-dimensional modules over a bound quiver algebra, presented as
// representations: a dimension at every vertex and a matrix for every arrow,
// with M(a): M(src a) -> M(dst a) and paths acting by composing matrices in
// function order. Everything downstream (AR translates, almost split
// sequences, knitting) is built from the handful of exact kernels, cokernels
// and Hom spaces here.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverworks/algebra.hpp"

namespace qw {

struct Representation {
  std::shared_ptr<const AlgebraBasis> alg;
  std::vector<int> dims;         // by vertex id
  std::vector<Matrix> mats;      // by arrow id, shape dims[dst] x dims[src]

  const Quiver& quiver() const { return alg->quiver(); }
  const Field& field() const { return alg->field(); }
  int dim_at(int v) const { return dims.at(v); }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<int> dim_vector() const { return dims; }

  // Matrix of the action of a path / a combination of parallel paths.
  Matrix act(const Path& p) const;
  Matrix act(const LinComb& v) const;

  // Shape and relation check; throws DomainError("BadModule"...) on failure.
  void check() const;
};

// A homomorphism of representations: one matrix per vertex,
// at[v]: M(v) -> N(v), commuting with all arrow actions. Plain data; the
// source and target are passed alongside where needed.
struct ModuleMap {
  std::vector<Matrix> at;

  bool is_zero() const;
  Vec flat(const Field& f) const;  // all entries, vertex by vertex, row-major
};

// Does f intertwine the arrow actions (f_t M(a) = N(a) f_s for every arrow)?
bool intertwines(const Representation& m, const Representation& n, const ModuleMap& f);
// g after f, vertexwise.
ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f);

Representation zero_module(std::shared_ptr<const AlgebraBasis> alg);
Representation simple_at(std::shared_ptr<const AlgebraBasis> alg, int v);
// Indecomposable projective P_v: P_v(w) = paths v -> w, arrows postcompose.
Representation projective_at(std::shared_ptr<const AlgebraBasis> alg, int v);
// Indecomposable injective I_v: I_v(w) = (paths w -> v)^*, arrows act by
// transposed precomposition.
Representation injective_at(std::shared_ptr<const AlgebraBasis> alg, int v);

Representation direct_sum(const Representation& a, const Representation& b);
Representation direct_sum(const std::vector<Representation>& parts);

// Basis of Hom(M, N) as module maps (kernel of the intertwining conditions;
// deterministic order).
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

// Submodule spanned by the given vectors (closed up under the action),
// returned with its embedding, and quotient with its projection.
std::pair<Representation, ModuleMap> sub_module(const Representation& m,
                                                const std::vector<std::vector<Vec>>& gens);
std::pair<Representation, ModuleMap> quotient_module(const Representation& m,
                                                     const std::vector<std::vector<Vec>>& gens);

// rad M (arrow ideal applied to M), with embedding.
std::pair<Representation, ModuleMap> radical_of(const Representation& m);
// top M = M / rad M, with projection.
std::pair<Representation, ModuleMap> top_of(const Representation& m);
// soc M (joint kernel of all arrows out of each vertex), with embedding.
std::pair<Representation, ModuleMap> socle_of(const Representation& m);

// Kernel of f: M -> N as a submodule of its source, with embedding, and
// cokernel as a quotient of its target, with projection.
std::pair<Representation, ModuleMap> kernel_of(const Representation& src, const ModuleMap& f);
std::pair<Representation, ModuleMap> cokernel_of(const Representation& dst, const ModuleMap& f);

// Projective cover P(M) -> M: the cover, the surjection, and the list of
// vertices v with P_v summands (with multiplicity, in order).
struct CoverData {
  Representation p;
  ModuleMap onto;
  std::vector<int> vertices;
};
CoverData projective_cover(const Representation& m);

// Injective envelope M -> I(M), same bookkeeping.
struct EnvelopeData {
  Representation i;
  ModuleMap into;
  std::vector<int> vertices;
};
EnvelopeData injective_envelope(const Representation& m);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

// Minimal projective presentation P1 -> P0 -> M -> 0, with the summand
// vertices of each term recorded (P = directsum of P_v over the list).
struct Presentation2 {
  Representation p1, p0;
  ModuleMap f;      // p1 -> p0
  ModuleMap cover;  // p0 -> m
  std::vector<int> p1_vertices, p0_vertices;
};
Presentation2 minimal_projective_presentation(const Representation& m);

// AR translate via the Nakayama functor on a minimal presentation:
// tau M = ker(nu P1 -> nu P0); zero for projectives.
Representation ar_translate(const Representation& m);
// Dual construction from a minimal injective copresentation; zero for
// injectives.
Representation ar_translate_inverse(const Representation& m);

// The almost split sequence 0 -> tau M -> E -> M -> 0 for indecomposable
// non-projective M, built as a nonzero element of the socle of Ext^1(M, tau M)
// over End(M). Exactness is verified internally by rank counts.
struct ARSequence {
  Representation tau_m, middle;
  ModuleMap left;   // tau_m -> middle
  ModuleMap right;  // middle -> m (the representation passed in)
};
ARSequence almost_split_sequence_ending_at(const Representation& m);

// Three-valued answers for the questions that are only semi-decidable at
// this level of generality (spec: best effort over GF(p)).
enum class Verdict { yes, no, unknown };
std::string verdict_name(Verdict v);

// Indecomposability: over Q certified via the codimension of the radical of
// End(M) (trace form); over GF(p) via Fitting decompositions of endomorphisms
// and, for small End rings, exhaustive idempotent search.
Verdict is_indecomposable(const Representation& m);

// Decomposition into indecomposable summands (best effort: summands whose
// indecomposability cannot be certified are flagged unknown).
struct Summand {
  Representation rep;
  int multiplicity = 1;
  Verdict indecomposable = Verdict::unknown;
};
std::vector<Summand> decompose(const Representation& m);

// Isomorphism test: dimension vectors, Hom dimensions, then an explicit
// search for an invertible intertwiner (deterministic).
Verdict isomorphic(const Representation& a, const Representation& b);

// Projective dimension, up to the cap; nullopt if the resolution is still
// going at the cap.
std::optional<int> projective_dimension(const Representation& m, int cap = 12);

// Split a one-point extension: v must be a source of the quiver. Returns the
// restricted algebra B on the other vertices and rad P_v as a B-module.
std::pair<AlgebraPresentation, Representation> one_point_extension_split(
    const AlgebraPresentation& a, const std::string& v, int cap = 24);
// Dual: v must be a sink; returns B and I_v / soc as a B-module.
std::pair<AlgebraPresentation, Representation> one_point_coextension_split(
    const AlgebraPresentation& a, const std::string& v, int cap = 24);

// View a module with zero dimension outside the chosen convex set as a module
// over the restricted algebra.
Representation restrict_module(const Representation& m,
                               std::shared_ptr<const AlgebraBasis> sub);

}  // namespace qw
