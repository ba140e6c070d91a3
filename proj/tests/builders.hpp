#pragma once

// Programmatic copies of the standing example algebras. The text fixtures
// under fixtures/ describe the same data; the parser tests cross-check the
// two, so a typo in either shows up as a mismatch.

#include <initializer_list>
#include <string>
#include <vector>

#include "quiverworks/algebra.hpp"

namespace qwtest {

using namespace qw;

// Parse "a*b" against q (function order: rightmost arrow acts first).
inline Path path_of(const Quiver& q, const std::string& word) {
  std::vector<std::string> names;
  std::string cur;
  for (char ch : word) {
    if (ch == '*') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  names.push_back(cur);
  Path p;
  p.base = q.arrow(q.arrow_id(names.back())).src;
  for (auto it = names.rbegin(); it != names.rend(); ++it)
    p.arrows.push_back(q.arrow_id(*it));
  return p;
}

inline LinComb monomial_relation(const Field& f, const Quiver& q, const std::string& word) {
  return LinComb::term(f, Scalar::of(f, 1), path_of(q, word));
}

inline LinComb difference_relation(const Field& f, const Quiver& q, const std::string& lhs,
                                   const std::string& rhs) {
  LinComb r = monomial_relation(f, q, lhs);
  r.add(path_of(q, rhs), Scalar::of(f, -1));
  return r;
}

// A2: 1 --a--> 2, no relations. dim 3.
inline AlgebraPresentation a2() {
  AlgebraPresentation p;
  p.name = "a2";
  p.quiver.add_vertex("1");
  p.quiver.add_vertex("2");
  p.quiver.add_arrow("a", "1", "2");
  return p;
}

// Kronecker: two arrows 1 -> 2, hereditary. dim 4.
inline AlgebraPresentation kronecker() {
  AlgebraPresentation p;
  p.name = "kronecker";
  p.quiver.add_vertex("1");
  p.quiver.add_vertex("2");
  p.quiver.add_arrow("a", "1", "2");
  p.quiver.add_arrow("b", "1", "2");
  return p;
}

// Five-vertex radical-square-zero algebra. dim 12 (5 vertices + 7 arrows).
inline AlgebraPresentation radsq5() {
  AlgebraPresentation p;
  p.name = "radsq5";
  for (const char* v : {"1", "2", "3", "4", "5"}) p.quiver.add_vertex(v);
  p.quiver.add_arrow("al", "2", "1");
  p.quiver.add_arrow("be", "2", "1");
  p.quiver.add_arrow("ga", "3", "2");
  p.quiver.add_arrow("rh", "3", "3");
  p.quiver.add_arrow("de", "4", "3");
  p.quiver.add_arrow("e1", "5", "4");
  p.quiver.add_arrow("e2", "5", "4");
  for (const char* w :
       {"al*ga", "be*ga", "ga*rh", "rh*rh", "rh*de", "ga*de", "de*e1", "de*e2"})
    p.relations.push_back(monomial_relation(p.field, p.quiver, w));
  return p;
}

// Self-injective dimension-10 algebra over GF(2): two vertices x, y with
// sigma: y->x, delta: x->y, rho: y->y and relations
// rho^4 = 0, rho^2 = delta*sigma, sigma*delta = sigma*rho*delta.
inline AlgebraPresentation selfinj10() {
  AlgebraPresentation p;
  p.name = "selfinj10";
  p.field = Field(2);
  p.quiver.add_vertex("x");
  p.quiver.add_vertex("y");
  p.quiver.add_arrow("s", "y", "x");
  p.quiver.add_arrow("d", "x", "y");
  p.quiver.add_arrow("r", "y", "y");
  p.relations.push_back(monomial_relation(p.field, p.quiver, "r*r*r*r"));
  p.relations.push_back(difference_relation(p.field, p.quiver, "r*r", "d*s"));
  p.relations.push_back(difference_relation(p.field, p.quiver, "s*d", "s*r*d"));
  return p;
}

// One loop with square zero. dim 2.
inline AlgebraPresentation loop_sq() {
  AlgebraPresentation p;
  p.name = "loop_sq";
  p.quiver.add_vertex("v");
  p.quiver.add_arrow("r", "v", "v");
  p.relations.push_back(monomial_relation(p.field, p.quiver, "r*r"));
  return p;
}

}  // namespace qwtest
