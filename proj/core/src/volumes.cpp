#include "skewcoh/volumes.hpp"

namespace skewcoh {

VolAssignment VolAssignment::canonical(const FiniteGroup& G) {
  VolAssignment va;
  const int n = G.dim();
  const int m = G.modulus();
  va.vols_.reserve(G.size());
  for (const auto& e : G.elements()) {
    ExtForm v = ExtForm::one(n, m);
    for (const auto& row : e.ann_fixed.basis)
      v = v.wedge(ExtForm::one_form(n, m, row));
    if (v.is_zero())
      throw VerificationError("VolAssignment: canonical volume form vanished");
    va.vols_.push_back(std::move(v));
  }
  va.rebuild_theta(G);
  return va;
}

void VolAssignment::override_vol(const FiniteGroup& G, int g, const ExtForm& form) {
  if (G.in_kernel(g))
    throw InputError("VolAssignment: kernel volume forms are pinned to 1");
  const GroupElement& e = G.elem(g);
  if (form.is_zero() || !form.is_homogeneous() || form.degree() != e.codim)
    throw InputError("VolAssignment: override must be a nonzero form of degree codim");
  // Must span the same line: proportional to the canonical top form of
  // Ann(V^g).  theta vanishing patterns do not depend on the choice.
  ExtForm canon = ExtForm::one(form.ambient(), form.modulus());
  for (const auto& row : e.ann_fixed.basis)
    canon = canon.wedge(ExtForm::one_form(form.ambient(), form.modulus(), row));
  const auto& [mask0, c0] = *canon.terms().begin();
  CycNum ratio = form.coeff(mask0) / c0;
  if (form != canon.scaled(ratio))
    throw InputError("VolAssignment: override does not lie on the volume line");
  vols_[g] = form;
  rebuild_theta(G);
}

void VolAssignment::rebuild_theta(const FiniteGroup& G) {
  const int order = G.size();
  const int m = G.modulus();
  theta_.assign(order, std::vector<CycNum>(order, CycNum::zero(m)));
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      ExtForm w = vols_[g].wedge(vols_[h]);
      if (w.is_zero()) continue;
      const ExtForm& target = vols_[G.mult(g, h)];
      const auto& [mask0, c0] = *target.terms().begin();
      CycNum ratio = w.coeff(mask0) / c0;
      if (w != target.scaled(ratio))
        throw VerificationError("VolAssignment: wedge of volumes is not proportional"
                                " to the product's volume form");
      theta_[g][h] = std::move(ratio);
    }
  }
}

VolAlgebraElem VolAlgebraElem::basis(int g, int m) {
  VolAlgebraElem e;
  e.coeffs.emplace(g, CycNum::one(m));
  return e;
}

void VolAlgebraElem::add(int g, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(g);
  if (it == coeffs.end()) {
    coeffs.emplace(g, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

VolAlgebraElem avol_multiply(const FiniteGroup& G, const VolAssignment& vols,
                             const VolAlgebraElem& x, const VolAlgebraElem& y) {
  VolAlgebraElem r;
  for (const auto& [g, cg] : x.coeffs) {
    for (const auto& [h, ch] : y.coeffs) {
      const CycNum& t = vols.theta(g, h);
      if (t.is_zero()) continue;
      r.add(G.mult(g, h), cg * ch * t);
    }
  }
  return r;
}

std::vector<GenerationCertificate> avol_generation_certificates(
    const FiniteGroup& G, const VolAssignment& vols, const QuotientPoset& P) {
  const int m = G.modulus();
  std::vector<GenerationCertificate> out(G.size());

  std::vector<bool> coset_minimal(P.size(), false);
  for (int a : P.minimal_nonidentity) coset_minimal[a] = true;

  // Greedy descent in the poset: factor off the representative of a
  // minimal coset below g, recurse on the remainder (its codimension is
  // strictly smaller).
  std::function<std::vector<int>(int)> factorize = [&](int g) -> std::vector<int> {
    int coset = P.coset_of[g];
    if (G.in_kernel(g)) return {g};
    if (coset_minimal[coset]) {
      int rep = P.cosets[coset].representative;
      if (rep == g) return {g};
      int k = G.mult(G.inverse(rep), g);  // g = rep * k with k in K
      if (!G.in_kernel(k))
        throw VerificationError("avol_generation_certificates: coset bookkeeping broke");
      std::vector<int> f{rep};
      if (k != 0) f.push_back(k);
      return f;
    }
    for (int b : P.minimal_nonidentity) {
      if (!P.less_eq[b][coset]) continue;
      int z = P.cosets[b].representative;
      int rest = G.mult(G.inverse(z), g);
      if (vols.theta(z, rest).is_zero())
  throw VerificationError("avol_generation_certificates: theta vanished below g");
      std::vector<int> f{z};
      std::vector<int> tail = factorize(rest);
      f.insert(f.end(), tail.begin(), tail.end());
      return f;
    }
    throw VerificationError(
        "avol_generation_certificates: no minimal coset below a non-minimal element");
  };

  for (int g = 0; g < G.size(); ++g) {
    GenerationCertificate c;
    c.target = g;
    c.factors = factorize(g);
    // The accumulated theta scalar along the factor chain.
    CycNum scalar = CycNum::one(m);
    int acc = c.factors[0];
    for (std::size_t i = 1; i < c.factors.size(); ++i) {
      scalar *= vols.theta(acc, c.factors[i]);
      acc = G.mult(acc, c.factors[i]);
    }
    if (acc != g || scalar.is_zero())
      throw VerificationError("avol_generation_certificates: certificate invalid");
    c.scalar = std::move(scalar);
    out[g] = std::move(c);
  }
  return out;
}

bool verify_certificate(const FiniteGroup& G, const VolAssignment& vols,
                        const GenerationCertificate& c) {
  const int m = G.modulus();
  VolAlgebraElem acc = VolAlgebraElem::basis(c.factors.empty() ? 0 : c.factors[0], m);
  for (std::size_t i = 1; i < c.factors.size(); ++i)
    acc = avol_multiply(G, vols, acc, VolAlgebraElem::basis(c.factors[i], m));
  VolAlgebraElem expected;
  expected.add(c.target, c.scalar);
  return acc == expected && !c.scalar.is_zero();
}

}  // namespace skewcoh
