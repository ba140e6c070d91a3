#pragma once

// Plain-text workspace files. One file describes one object; the first
// keyword decides the kind:
//
//   field Q | GF(p)        algebra file: vertices, arrows, relations and
//                          optionally named modules over the algebra
//   tq                     translation quiver with flags, tau and sigma
//   cover of <file>        voltage data over an algebra or tq file
//   functor of <f> onto <g> an explicit functor between two algebra files
//
// Lines are independent; '#' starts a comment. Words are arrow names joined
// by '*' in function order (rightmost acts first), e_v is a lazy path, and a
// leading integer or a/b token in a term is its coefficient.

#include <map>
#include <string>
#include <vector>

#include "quiverworks/representation.hpp"
#include "quiverworks/translation_quiver.hpp"

namespace qw {

struct ModuleSpec {
  std::string name;
  std::map<std::string, int> dims;     // vertex name -> dimension (absent = 0)
  std::map<std::string, Matrix> mats;  // arrow name -> matrix (absent = zero)
};

struct CoverSpec {
  std::string base_file;  // relative to the cover file's directory
  std::string group;      // "Z" or "Z/n"
  std::string name;
  int window = 2;                        // for Z covers of algebras
  std::map<std::string, long> voltage;   // arrow name -> group element (absent = 0)
};

struct FunctorSpec {
  std::string total_file, base_file;
  std::string name;
  std::string group;                               // optional, for Galois checks
  std::map<std::string, std::string> vertex_map;   // total vertex -> base vertex
  std::map<std::string, std::string> arrow_map;    // total arrow -> lincomb text
  std::map<std::string, std::string> vertex_action;  // deck generator on vertices
  std::map<std::string, std::string> arrow_action;   // deck generator on arrows
};

struct Fixture {
  enum class Kind { algebra, tq, cover, functor };
  Kind kind = Kind::algebra;
  std::string name;  // `name` line, else the file stem
  std::string dir;   // directory of the source file (resolves base_file refs)

  AlgebraPresentation pres;         // kind == algebra
  std::vector<ModuleSpec> modules;  // kind == algebra
  TranslationQuiver tq;             // kind == tq
  CoverSpec cover;                  // kind == cover
  FunctorSpec functor;              // kind == functor
};

Fixture parse_fixture(const std::string& text, const std::string& name_hint,
                      const std::string& dir);
Fixture load_fixture(const std::string& path);  // throws ParseError with line numbers

Path parse_path_word(const Quiver& q, const std::string& word);
LinComb parse_lincomb(const Quiver& q, const Field& f, const std::string& text);
Matrix parse_matrix(const Field& f, const std::string& text);

// Instantiate a parsed module over a computed basis of the same presentation.
// Validates shapes and that every relation acts by zero.
Representation build_module(const ModuleSpec& spec,
                            std::shared_ptr<const AlgebraBasis> alg);

std::string print_matrix(const Matrix& m);
std::string print_algebra(const AlgebraPresentation& pres,
                          const std::vector<ModuleSpec>& modules = {});
std::string print_tq(const TranslationQuiver& tq);
ModuleSpec module_spec_of(const Representation& m, const std::string& name);

}  // namespace qw
