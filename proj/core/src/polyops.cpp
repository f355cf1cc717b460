#include "skewcoh/polyops.hpp"

namespace skewcoh {

Poly poly_action(const FiniteGroup& G, int h, const Poly& f) {
  if (h == 0) return f;
  return f.substituted(G.elem(h).action);
}

SkewElem SkewElem::term(int g, Poly f) {
  SkewElem e;
  if (!f.is_zero()) e.components.emplace(g, std::move(f));
  return e;
}

void SkewElem::add(int g, const Poly& f) {
  if (f.is_zero()) return;
  auto it = components.find(g);
  if (it == components.end()) {
    components.emplace(g, f);
  } else {
    it->second += f;
    if (it->second.is_zero()) components.erase(it);
  }
}

SkewElem skew_add(const SkewElem& x, const SkewElem& y) {
  SkewElem r = x;
  for (const auto& [g, f] : y.components) r.add(g, f);
  return r;
}

SkewElem skew_multiply(const FiniteGroup& G, const SkewElem& x, const SkewElem& y) {
  SkewElem r;
  for (const auto& [g, fg] : x.components)
    for (const auto& [h, fh] : y.components)
      r.add(G.mult(g, h), fg * poly_action(G, g, fh));
  return r;
}

CycNum quantum_integer(int k, const CycNum& eps) {
  CycNum acc = CycNum::zero(eps.modulus());
  CycNum p = CycNum::one(eps.modulus());
  for (int i = 0; i < k; ++i) {
    acc += p;
    p *= eps;
  }
  return acc;
}

Poly quantum_partial_monomial_basis(const Poly& f, int var, const CycNum& eps) {
  Poly r(f.vars(), f.modulus());
  for (const auto& [k, c] : f.terms()) {
    int e = mono_exp(k, var);
    if (e == 0) continue;
    CycNum q = quantum_integer(e, eps);
    if (q.is_zero()) continue;
    MonoKey lowered = k - (MonoKey(1) << (8 * var));
    r.add_term(lowered, c * q);
  }
  return r;
}

Poly quantum_partial(const FiniteGroup& G, int g, const Poly& f, int slot) {
  const GroupElement& e = G.elem(g);
  Poly in_eigen = f.substituted(e.eigen.Pinv);
  Poly d = quantum_partial_monomial_basis(in_eigen, slot, e.eigen.slot_eigenvalue[slot]);
  return d.substituted(e.eigen.P);
}

Poly reduce_mod_perp(const FiniteGroup& G, int g, const Poly& f) {
  return f.substituted(G.elem(g).proj_fixed);
}

Poly reduce_to_split(const FiniteGroup& G, int g, const Poly& f) {
  return f.substituted(G.elem(g).to_split);
}

Poly split_to_standard(const FiniteGroup& G, int g, const Poly& f) {
  return f.substituted(G.elem(g).from_split);
}

}  // namespace skewcoh
