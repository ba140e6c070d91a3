#pragma once

// HH^0 and HH^1 of a bound quiver algebra by exact linear algebra on the
// certified basis, with no bimodule resolution: HH^0 is the center, and
// HH^1 = Der(A)/Inn(A) is computed through normalized derivations.
//
// A derivation is normalized when it kills every vertex idempotent; its value
// on an arrow a then lies in the bimodule block e_{t(a)} A e_{s(a)}, so the
// derivation is exactly a tuple of such blocks subject to one linear
// condition per relation (the Leibniz expansion must reduce to zero in A).
// Every derivation is inner-equivalent to a normalized one, because the
// vertex span k^n is separable, and a normalized derivation is inner iff it
// is [x,-] for x in the diagonal subalgebra diag(A) = (+)_v e_v A e_v. Hence
//
//   HH^1 = dim nDer - dim nInn,   dim nInn = dim diag(A) - dim HH^0,
//
// and the full (un-normalized) spaces have
//
//   dim Der = dim nDer + dim A - dim diag(A),   dim Inn = dim A - dim HH^0,
//
// with the same difference. Both readings are reported.

#include <map>
#include <string>
#include <vector>

#include "quiverworks/algebra.hpp"

namespace qw {

struct DerivationSpace {
  // Basis of the normalized derivations: one entry per derivation, giving its
  // value on each arrow (quiver arrow order) as an element of e_t A e_s.
  std::vector<std::vector<LinComb>> basis;
  // Sub-basis of the normalized inner derivations [x,-], x over diag(A).
  std::vector<std::vector<LinComb>> inner_basis;

  int hh0 = 0;      // dim of the center
  int diagonal = 0; // dim of (+)_v e_v A e_v
  int nder = 0;     // = basis.size()
  int ninner = 0;   // = inner_basis.size() = diagonal - hh0
  int der = 0;      // full derivation space: nder + dim A - diagonal
  int inner = 0;    // full inner space: dim A - hh0
  int hh1 = 0;      // = nder - ninner = der - inner
};

// Dimension of the center (solutions of [z, g] = 0 for all generators g).
int hh0_dim(const AlgebraBasis& alg);

// The full report; throws DomainError("Internal") if the two computations of
// dim nInn (commutator span vs. diagonal - center) ever disagree.
DerivationSpace derivation_space(const AlgebraBasis& alg);

struct Hh1Dims {
  int der = 0;
  int inner = 0;
  int hh1 = 0;
};
Hh1Dims hh1_dim(const AlgebraBasis& alg);

struct DerivationCheck {
  bool derivation = false; // Leibniz expansion of every relation reduces to 0
  bool inner = false;      // lies in the span of [x,-], x diagonal
};

// Check a candidate normalized derivation given by its values on arrows
// (missing names mean value 0). Values are reduced first; a value with a term
// outside e_{t(a)} A e_{s(a)} throws DomainError("BadDerivationValue"), and
// an unknown arrow name throws DomainError("UnknownArrow").
DerivationCheck verify_derivation(const AlgebraBasis& alg,
                                  const std::map<std::string, LinComb>& values);

}  // namespace qw
