#pragma once

#include <map>
#include <vector>

#include "skewcoh/exterior.hpp"
#include "skewcoh/group.hpp"
#include "skewcoh/poset.hpp"

namespace skewcoh {

/// A choice of volume form vol_g for every group element: a nonzero top
/// form on the perp space of g, embedded in the exterior algebra on V* via
/// the annihilator of V^g.  The canonical choice wedges the RREF basis of
/// Ann(V^g) in row order; kernel elements get the scalar 1.  theta is the
/// resulting multiplicative 2-cocycle: vol_g ^ vol_h = theta(g,h) vol_{gh}.
class VolAssignment {
 public:
  static VolAssignment canonical(const FiniteGroup& G);

  /// Replace the volume form at a non-kernel element (any nonzero scalar
  /// multiple of the canonical form is legal) and rebuild the theta table.
  void override_vol(const FiniteGroup& G, int g, const ExtForm& form);

  const ExtForm& vol(int g) const { return vols_[g]; }
  const CycNum& theta(int g, int h) const { return theta_[g][h]; }
  const std::vector<std::vector<CycNum>>& theta_table() const { return theta_; }

 private:
  void rebuild_theta(const FiniteGroup& G);
  std::vector<ExtForm> vols_;
  std::vector<std::vector<CycNum>> theta_;
};

/// Element of the twisted volume algebra A_vol: a linear combination
/// sum_g c_g (vol_g tensor g), multiplied through the theta cocycle.
struct VolAlgebraElem {
  std::map<int, CycNum> coeffs;

  static VolAlgebraElem basis(int g, int m);
  bool is_zero() const { return coeffs.empty(); }
  void add(int g, const CycNum& c);
  bool operator==(const VolAlgebraElem& o) const { return coeffs == o.coeffs; }
};

VolAlgebraElem avol_multiply(const FiniteGroup& G, const VolAssignment& vols,
                             const VolAlgebraElem& x, const VolAlgebraElem& y);

/// Factorization of vol_g (x) g into generators of A_vol: kernel elements
/// and representatives of poset-minimal cosets.  The factor product equals
/// scalar * (vol_g (x) g) with a nonzero scalar.
struct GenerationCertificate {
  int target = 0;
  std::vector<int> factors;  // element indices, in product order
  CycNum scalar;
};

/// Certificates for every group element (Theorem-level guarantee: the greedy
/// poset descent always succeeds; failure throws VerificationError).
std::vector<GenerationCertificate> avol_generation_certificates(
    const FiniteGroup& G, const VolAssignment& vols, const QuotientPoset& P);

/// Recompute the product of a certificate's factors and check it equals
/// scalar * vol_target (x) target.
bool verify_certificate(const FiniteGroup& G, const VolAssignment& vols,
                        const GenerationCertificate& c);

}  // namespace skewcoh
