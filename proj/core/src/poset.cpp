#include "skewcoh/poset.hpp"

#include <sstream>

namespace skewcoh {

bool leq(const FiniteGroup& G, int g, int h) {
  int gh = G.mult(G.inverse(g), h);
  return G.elem(g).codim + G.elem(gh).codim == G.elem(h).codim;
}

CodimEquivalenceReport check_codim_equivalences(const FiniteGroup& G, int g, int h) {
  const GroupElement& eg = G.elem(g);
  const GroupElement& eh = G.elem(h);
  const GroupElement& egh = G.elem(G.mult(g, h));
  CodimEquivalenceReport r;
  r.perp_intersection_trivial = Subspace::intersect(eg.perp, eh.perp).dim() == 0;
  r.fixed_spaces_span = Subspace::sum(eg.fixed, eh.fixed).dim() == G.dim();
  r.codims_add = eg.codim + eh.codim == egh.codim;
  Subspace perp_sum = Subspace::sum(eg.perp, eh.perp);
  r.perps_decompose = r.perp_intersection_trivial && perp_sum == egh.perp;
  r.all_agree = (r.perp_intersection_trivial == r.fixed_spaces_span) &&
                (r.fixed_spaces_span == r.codims_add) &&
                (r.codims_add == r.perps_decompose);
  if (r.all_agree && r.codims_add)
    r.fixed_intersection_is_fixed_of_product =
        Subspace::intersect(eg.fixed, eh.fixed) == egh.fixed;
  return r;
}

QuotientPoset quotient_poset(const FiniteGroup& G) {
  QuotientPoset P;
  P.coset_of.assign(G.size(), -1);
  const std::vector<int>& K = G.kernel();
  for (int i = 0; i < G.size(); ++i) {
    if (P.coset_of[i] >= 0) continue;
    QuotientPoset::Coset c;
    c.representative = i;
    int id = static_cast<int>(P.cosets.size());
    for (int k : K) {
      int member = G.mult(i, k);
      P.coset_of[member] = id;
      c.members.push_back(member);
    }
    std::sort(c.members.begin(), c.members.end());
    P.cosets.push_back(std::move(c));
  }

  const int q = P.size();
  P.less_eq.assign(q, std::vector<bool>(q, false));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      P.less_eq[a][b] = leq(G, P.cosets[a].representative, P.cosets[b].representative);

  for (int a = 0; a < q; ++a)
    if (!P.less_eq[a][a]) throw VerificationError("quotient_poset: relation not reflexive");
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a != b && P.less_eq[a][b] && P.less_eq[b][a])
        throw VerificationError("quotient_poset: antisymmetry violated on G/K");
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (!P.less_eq[a][b]) continue;
      for (int c = 0; c < q; ++c)
        if (P.less_eq[b][c] && !P.less_eq[a][c])
          throw VerificationError("quotient_poset: transitivity violated on G/K");
    }

  for (int a = 1; a < q; ++a) {
    bool minimal = true;
    for (int b = 1; b < q; ++b)
      if (b != a && P.less_eq[b][a]) {
        minimal = false;
        break;
      }
    if (minimal) P.minimal_nonidentity.push_back(a);
  }
  return P;
}

std::vector<std::pair<int, int>> QuotientPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int q = size();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == b || !less_eq[a][b]) continue;
      bool covered = true;
      for (int c = 0; c < q && covered; ++c)
        if (c != a && c != b && less_eq[a][c] && less_eq[c][b]) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

std::string hasse_dot(const FiniteGroup& G, const QuotientPoset& P) {
  std::ostringstream os;
  os << "digraph poset {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int a = 0; a < P.size(); ++a) {
    const GroupElement& e = G.elem(P.cosets[a].representative);
    os << "  n" << a << " [label=\"" << e.name << "\\ncodim " << e.codim << "\"];\n";
  }
  for (const auto& [a, b] : P.covers())
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace skewcoh
