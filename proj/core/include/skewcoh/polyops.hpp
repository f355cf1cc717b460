#pragma once

#include <map>

#include "skewcoh/group.hpp"
#include "skewcoh/poly.hpp"

namespace skewcoh {

/// Action of a group element on S(V): the algebra automorphism extending
/// x_i |-> column i of the action matrix.
Poly poly_action(const FiniteGroup& G, int h, const Poly& f);

/// Element of the skew group algebra S(V)#G: finitely many components
/// f_g (x) g.
struct SkewElem {
  std::map<int, Poly> components;

  static SkewElem zero() { return {}; }
  static SkewElem term(int g, Poly f);
  bool is_zero() const { return components.empty(); }
  void add(int g, const Poly& f);
  bool operator==(const SkewElem& o) const { return components == o.components; }
  bool operator!=(const SkewElem& o) const { return !(*this == o); }
};

SkewElem skew_add(const SkewElem& x, const SkewElem& y);
/// (a (x) g)(b (x) h) = a (^g b) (x) gh, extended bilinearly.
SkewElem skew_multiply(const FiniteGroup& G, const SkewElem& x, const SkewElem& y);

/// The quantum integer [k]_eps = 1 + eps + ... + eps^{k-1}.
CycNum quantum_integer(int k, const CycNum& eps);

/// Quantum partial derivative in the given variable of a polynomial already
/// written in an eigenbasis: on a monomial with exponent k in the variable,
/// multiplies by [k]_eps and lowers the exponent; the ordinary partial
/// derivative when eps = 1.
Poly quantum_partial_monomial_basis(const Poly& f, int var, const CycNum& eps);

/// Quantum partial with respect to slot `slot` of the eigenbasis B_g of the
/// element's action: converts f to eigen coordinates, differentiates with
/// the slot's eigenvalue, converts back.
Poly quantum_partial(const FiniteGroup& G, int g, const Poly& f, int slot);

/// Reduction of f modulo the ideal I((V^g)^perp): the image of f under the
/// projection V -> V^g along the perp space, expressed in the standard
/// coordinates.  An algebra homomorphism with kernel exactly the ideal.
Poly reduce_mod_perp(const FiniteGroup& G, int g, const Poly& f);

/// Same reduction expressed in the coordinates of the canonical V^g basis
/// (codim fewer variables).
Poly reduce_to_split(const FiniteGroup& G, int g, const Poly& f);

/// Rewrite a polynomial in V^g-basis coordinates back in standard ones.
Poly split_to_standard(const FiniteGroup& G, int g, const Poly& f);

}  // namespace skewcoh
