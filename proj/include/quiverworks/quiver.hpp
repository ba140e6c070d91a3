#pragma once

// Quivers, paths and linear combinations of paths.
//
// Composition is in function order throughout: p * q means "first q, then p",
// and is defined when target(q) == source(p). A Path stores its arrows in
// order of application (index 0 acts first), so the printed form "a*b" (first
// b, then a) is the reverse of the stored sequence.

#include <map>
#include <string>
#include <vector>

#include "quiverworks/field.hpp"

namespace qw {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
};

class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, const std::string& src, const std::string& dst);
  int add_arrow(const std::string& name, int src, int dst);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Lookup by name; throws DomainError("UnknownVertex"/"UnknownArrow").
  int vertex(const std::string& name) const;
  int arrow_id(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return vindex_.count(name) != 0; }

  // Arrows out of / into a vertex, in input order.
  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

  // True if the underlying undirected graph is connected (or empty).
  bool connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vindex_;
  std::map<std::string, int> aindex_;
};

// A path in a quiver. `arrows` lists arrow ids in order of application;
// an empty list is the lazy path at `base`. For nonempty paths `base` equals
// the source of the first applied arrow.
struct Path {
  int base = 0;
  std::vector<int> arrows;

  static Path lazy(int v) { return Path{v, {}}; }
  std::size_t length() const { return arrows.size(); }
  int source() const { return base; }
  int target(const Quiver& q) const {
    return arrows.empty() ? base : q.arrow(arrows.back()).dst;
  }

  // this∘q: first apply `first`, then this path. Throws on endpoint mismatch.
  Path after(const Path& first, const Quiver& q) const;

  // Degree-then-lexicographic order (lex on the applied-arrow sequence;
  // lazy paths ordered by vertex id).
  bool operator<(const Path& o) const;
  bool operator==(const Path& o) const = default;

  std::string str(const Quiver& q) const;  // "a*b" (function order), "e_v" for lazy
};

// Finitely supported linear combination of paths with common endpoints.
// (Endpoint consistency is the caller's concern; check_uniform verifies it.)
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Field& f) : f_(f) {}
  static LinComb term(const Field& f, const Scalar& c, const Path& p);

  const Field& field() const { return f_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Path, Scalar>& terms() const { return terms_; }

  void add(const Path& p, const Scalar& c);  // accumulate, dropping zeros
  LinComb operator+(const LinComb& o) const;
  LinComb operator-(const LinComb& o) const;
  LinComb scaled(const Scalar& c) const;
  // Function-order product: every term of this after every term of o.
  LinComb operator*(const LinComb& o) const;

  // All terms share source src and target tgt? (vacuously true when empty)
  bool check_uniform(const Quiver& q, int* src = nullptr, int* tgt = nullptr) const;

  std::string str(const Quiver& q) const;

 private:
  Field f_;
  std::map<Path, Scalar> terms_;
};

}  // namespace qw
