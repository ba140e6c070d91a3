#pragma once

// Translation quivers: a quiver with a partial translation tau on vertices,
// projective/injective markings, and a polarization sigma pairing the arrows
// into z with the arrows out of tau z. Finite windows of infinite stable
// components mark their rim with a `boundary` flag: existence checks that
// would look past the rim are waived there, everything interior is checked
// strictly.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverworks/algebra.hpp"
#include "quiverworks/quiver.hpp"

namespace qw {

struct TranslationQuiver {
  Quiver q;
  std::string name;
  std::vector<char> projective;  // per vertex
  std::vector<char> injective;
  std::vector<char> boundary;
  std::map<int, int> tau;    // z -> tau z, absent for projective/boundary z
  std::map<int, int> sigma;  // arrow into z -> arrow out of tau z (optional)

  int add_vertex(const std::string& name, bool proj = false, bool inj = false,
                 bool bdry = false);
  int add_arrow(const std::string& name, const std::string& src, const std::string& dst);

  bool is_projective(int v) const { return projective.at(v) != 0; }
  bool is_injective(int v) const { return injective.at(v) != 0; }
  bool is_boundary(int v) const { return boundary.at(v) != 0; }
  std::optional<int> tau_of(int v) const;
  std::optional<int> tau_inv_of(int v) const;  // linear scan of tau
};

// Structural validation. Checks that tau is injective, defined exactly on
// the non-projective non-boundary vertices, that meshes match up (the arrows
// y -> z correspond one-to-one with the arrows tau z -> y), and derives the
// polarization: explicit sigma entries are honored, remaining parallel arrows
// are paired off in input order. Returns the completed polarization for all
// arrows into interior non-projective vertices.
std::map<int, int> validate_translation_quiver(const TranslationQuiver& tq);

// The mesh relation at a non-projective vertex z: sum over arrows a: y -> z
// of a * sigma(a), a homogeneous degree-2 combination of paths tau z -> z.
LinComb mesh_relation(const TranslationQuiver& tq, const Field& f,
                      const std::map<int, int>& sigma, int z);

// The mesh category k(Gamma): paths of Gamma modulo the mesh ideal. The
// ideal is homogeneous, so Hom spaces are graded and each degree is computed
// exactly by reducing the degree-d paths modulo degreewise products
// p * m_z * q. Boundary meshes are omitted (their relation involves arrows
// outside the window).
class MeshCategory {
 public:
  MeshCategory(const TranslationQuiver& tq, const Field& f);

  // Dimension of Hom(x, y) in degree d.
  int dim(int x, int y, int d);
  // Reduced basis of Hom(x, y) in degree d (normal forms of paths).
  std::vector<LinComb> basis(int x, int y, int d);
  // Hom(x, y) dimensions by degree until they vanish for `window` consecutive
  // degrees (window defaults to the vertex count); nullopt if they never do
  // within `cap` degrees. Sums to the total Hom dimension when finite.
  std::optional<int> total_dim(int x, int y, int cap = 64);

  // Normal form of an arbitrary combination of parallel degree-d paths.
  Vec coords(const LinComb& v, int d);
  const std::vector<Path>& paths_of_degree(int d);

  const TranslationQuiver& tq() const { return tq_; }
  const Field& field() const { return f_; }
  const std::map<int, int>& sigma() const { return sigma_; }

 private:
  TranslationQuiver tq_;
  Field f_;
  std::map<int, int> sigma_;
  std::vector<LinComb> meshes_;               // one per interior non-projective z
  std::vector<std::vector<Path>> paths_;      // [d] = degree-d paths, lex order
  std::map<Path, int> pos_;                   // position within its degree
  std::vector<RowReducer> ideal_;             // [d] = span of degree-d ideal elements
  int built_ = -1;

  void extend(int d);  // build degrees up to d
};

// Graphviz rendering (tau as dashed back edges, flags as node decorations).
std::string export_dot(const TranslationQuiver& tq);

}  // namespace qw
