#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewcoh/linalg.hpp"

namespace skewcoh {

/// Index subsets of {0..n-1} as bitmasks; bit i stands for the dual basis
/// 1-form with index i, and a mask denotes the wedge of its members in
/// ascending index order.
using FormMask = std::uint32_t;

int wedge_sign(FormMask a, FormMask b);  // 0 if the masks intersect

/// Element of the exterior algebra on V*, with coefficients in Q(zeta_m).
/// No zero coefficients are stored, so equality is structural.
class ExtForm {
 public:
  ExtForm() : n_(0), m_(1) {}
  ExtForm(int n, int m) : n_(n), m_(m) {}

  static ExtForm scalar(int n, int m, const CycNum& c);
  static ExtForm one(int n, int m) { return scalar(n, m, CycNum::one(m)); }
  /// The dual basis 1-form with (0-based) index i.
  static ExtForm dual_basis(int n, int m, int i);
  /// A 1-form with the given dual coordinates.
  static ExtForm one_form(int n, int m, const Vec& coords);

  int ambient() const { return n_; }
  int modulus() const { return m_; }
  const std::map<FormMask, CycNum>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_homogeneous() const;
  /// Common degree of all terms; 0 for the zero form.
  int degree() const;

  void add_term(FormMask mask, const CycNum& c);

  ExtForm operator+(const ExtForm& o) const;
  ExtForm operator-(const ExtForm& o) const;
  ExtForm operator-() const;
  ExtForm scaled(const CycNum& c) const;
  ExtForm wedge(const ExtForm& o) const;

  bool operator==(const ExtForm& o) const {
    return n_ == o.n_ && m_ == o.m_ && t_ == o.t_;
  }
  bool operator!=(const ExtForm& o) const { return !(*this == o); }

  /// Coefficient at a mask (zero if absent).
  CycNum coeff(FormMask mask) const;

  /// Coordinates over the p-subsets of {0..n-1} listed in ascending mask
  /// order; requires homogeneity of degree p.
  Vec coordinates(int p) const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  int n_, m_;
  std::map<FormMask, CycNum> t_;
};

/// Pushforward of a form under h, computed from the inverse matrix of h:
/// the image of the i-th dual basis form has coordinates given by row i of
/// h^{-1} (i.e. dual coordinates transform by the inverse transpose).
ExtForm form_action_by_inverse(const Mat& h_inverse, const ExtForm& w);

/// All p-element subsets of {0..n-1} as masks, ascending.
std::vector<FormMask> masks_of_degree(int n, int p);

}  // namespace skewcoh
