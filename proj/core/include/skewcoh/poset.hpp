#pragma once

#include <string>
#include <vector>

#include "skewcoh/group.hpp"

namespace skewcoh {

/// g <= h iff codim V^g + codim V^{g^{-1}h} = codim V^h.
bool leq(const FiniteGroup& G, int g, int h);

/// Truth values of the four equivalent conditions relating a pair (g, h):
///   (i)   perp(g) cap perp(h) = 0
///   (ii)  V^g + V^h = V
///   (iii) codim V^g + codim V^h = codim V^{gh}
///   (iv)  perp(g) (+) perp(h) = perp(gh)
/// plus, when they hold, whether V^g cap V^h = V^{gh}.
struct CodimEquivalenceReport {
  bool perp_intersection_trivial = false;
  bool fixed_spaces_span = false;
  bool codims_add = false;
  bool perps_decompose = false;
  bool all_agree = false;          // the four conditions have one truth value
  bool fixed_intersection_is_fixed_of_product = false;  // only set when true
};

CodimEquivalenceReport check_codim_equivalences(const FiniteGroup& G, int g, int h);

/// The partial order induced on G/K by the codimension relation.
struct QuotientPoset {
  struct Coset {
    int representative = 0;        // minimal element index
    std::vector<int> members;      // ascending
  };
  std::vector<Coset> cosets;              // ordered by representative
  std::vector<int> coset_of;              // element index -> coset id
  std::vector<std::vector<bool>> less_eq; // relation on coset ids
  std::vector<int> minimal_nonidentity;   // coset ids, ascending

  int size() const { return static_cast<int>(cosets.size()); }
  bool leq(int a, int b) const { return less_eq[a][b]; }
  /// Covering pairs (a, b) of the transitive reduction, a < b.
  std::vector<std::pair<int, int>> covers() const;
};

/// Builds the poset and verifies reflexivity, antisymmetry and transitivity
/// (a violation throws VerificationError; the theory rules it out).
QuotientPoset quotient_poset(const FiniteGroup& G);

/// Graphviz DOT digraph of the covering relation, nodes labelled by the
/// coset representative's name and codimension.
std::string hasse_dot(const FiniteGroup& G, const QuotientPoset& P);

}  // namespace skewcoh
