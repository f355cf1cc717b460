#pragma once

#include <string>
#include <vector>

#include "skewcoh/exterior.hpp"
#include "skewcoh/linalg.hpp"

namespace skewcoh {

/// One element of an enumerated finite group.  The `defining` matrix is the
/// faithful representation used for enumeration and equality; `action` is
/// the (possibly non-faithful) representation on V that all cohomological
/// data refers to.  For groups given directly by matrices the two coincide.
struct GroupElement {
  int index = 0;
  Mat defining;
  Mat action;
  int order = 1;        // order in the group
  int action_order = 1; // order of the action matrix
  CycNum det;           // determinant of the action
  int det_exponent = 0; // det == zeta_m^det_exponent
  Subspace fixed;       // V^g
  Subspace perp;        // im(1 - g)
  int codim = 0;        // dim perp
  Subspace ann_fixed;   // functionals vanishing on V^g (carries vol_g)
  Subspace ann_perp;    // functionals vanishing on the perp space
  EigenDecomposition eigen;  // of the action, exponents ascending
  Mat proj_fixed;   // n x n projection onto V^g along the perp space
  Mat to_split;     // k x n: v-coordinates -> coordinates in the V^g basis
  Mat from_split;   // n x k: V^g basis coordinates -> v-coordinates
  std::string name; // cycle notation / diagonal / positional
};

struct ConjugacyClass {
  int representative = 0;        // minimal element index in the class
  std::vector<int> members;      // ascending
  std::vector<int> centralizer;  // Z(representative), ascending
};

/// A finite matrix group closed under products, with exact multiplication
/// table, conjugacy data and per-element geometric caches.  Immutable after
/// construction; all queries are read-only.
class FiniteGroup {
 public:
  /// Breadth-first closure from the given generators.  `action_gens` may
  /// be empty (the defining matrices then act on V themselves).  Throws
  /// InputError if the order would exceed `cap` or a generator is singular.
  static FiniteGroup close(std::vector<Mat> defining_gens,
                           std::vector<Mat> action_gens = {}, int cap = 20000);

  int size() const { return static_cast<int>(elems_.size()); }
  int dim() const { return dim_; }
  int modulus() const { return modulus_; }
  int exponent() const { return exponent_; }

  const GroupElement& elem(int i) const { return elems_[i]; }
  const std::vector<GroupElement>& elements() const { return elems_; }

  int mult(int i, int j) const;
  int inverse(int i) const { return inv_[i]; }
  int conjugate(int h, int g) const;  // h g h^{-1}

  const std::vector<int>& kernel() const { return kernel_; }
  bool in_kernel(int i) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }
  int class_representative(int i) const { return classes_[class_of_[i]].representative; }

  /// Minimal-index representatives of the double cosets L \ G / R.
  std::vector<int> double_cosets(const std::vector<int>& left,
                                 const std::vector<int>& right) const;

  /// Subgroup generated by the given element indices, ascending.
  std::vector<int> subgroup_generated_by(const std::vector<int>& gens) const;

  /// Minimal-index representatives of left cosets of `sub` in `super`.
  std::vector<int> left_coset_representatives(const std::vector<int>& super,
                                              const std::vector<int>& sub) const;

  /// Index of an element given by its defining matrix; -1 if absent.
  int find(const Mat& defining) const;

  /// Element indices whose action has codimension-one fixed space.
  std::vector<int> reflections() const;

  const std::vector<std::string>& variable_names() const { return var_names_; }
  void set_variable_names(std::vector<std::string> names);

 private:
  FiniteGroup() = default;
  void finalize();  // caches, kernel, classes

  int dim_ = 0;      // dimension of V (action)
  int modulus_ = 1;  // cyclotomic modulus (lcm of input modulus and exponent)
  int exponent_ = 1;
  std::vector<GroupElement> elems_;
  std::vector<std::vector<int>> table_;  // empty if order is too large
  std::vector<int> inv_;
  std::vector<int> kernel_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<std::string> var_names_;
};

/// Symmetric group S_n acting diagonally on `copies` copies of the
/// n-dimensional permutation representation, coordinates interleaved per
/// point, optionally padded with `trivial_summands` trivial coordinates.
FiniteGroup build_symmetric(int n, int copies = 1, int trivial_summands = 0,
                            int trivial_kernel_factor = 1, int cap = 20000);

/// The complex reflection group G(r,p,n): monomial n x n matrices whose
/// nonzero entries are r-th roots of unity with product an (r/p)-th root.
FiniteGroup build_grpn(int r, int p, int n, int cap = 20000);

/// Product of cyclic groups acting coordinate-wise on C^k by the given
/// root-of-unity orders (one generator per coordinate).
FiniteGroup build_cyclic_diag(const std::vector<int>& orders, int cap = 20000);

/// Wrap generators with an extra central factor Z/t acting trivially on V
/// (the defining representation gains one faithful coordinate).
void append_trivial_kernel_factor(std::vector<Mat>& defining_gens,
                                  std::vector<Mat>& action_gens, int t);

}  // namespace skewcoh
