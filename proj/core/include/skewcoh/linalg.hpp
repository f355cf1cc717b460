#pragma once

#include <optional>
#include <vector>

#include "skewcoh/cyclotomic.hpp"

namespace skewcoh {

using Vec = std::vector<CycNum>;

/// Dense matrix over Q(zeta_m), row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0), m_(1) {}
  Mat(int rows, int cols, int m);

  static Mat identity(int n, int m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return m_; }

  const CycNum& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  CycNum& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat transpose() const;
  Mat scaled(const CycNum& c) const;
  Mat pow(long e) const;
  Mat inverse() const;  // throws InputError if singular
  CycNum det() const;

  Vec apply(const Vec& v) const;  // matrix * column vector
  Vec row(int r) const;
  Vec col(int c) const;

  bool is_identity() const;
  bool is_zero() const;
  /// 0/1 matrix with exactly one 1 per row and column.
  bool is_permutation() const;
  /// At most one nonzero entry per column (and per row), all invertible.
  bool is_monomial() const;

  Mat embedded(int new_m) const;

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  static int compare(const Mat& a, const Mat& b);  // deterministic total order
  std::size_t hash() const;

 private:
  int rows_, cols_, m_;
  std::vector<CycNum> e_;
};

/// Reduce rows in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows);

/// A subspace of Q(zeta_m)^n in canonical form: the basis rows are the RREF
/// of any spanning set, so equal subspaces have identical bases.
struct Subspace {
  int ambient = 0;
  int m = 1;
  std::vector<Vec> basis;  // RREF rows, no zero rows

  static Subspace span(int ambient, int m, std::vector<Vec> vectors);
  static Subspace zero(int ambient, int m) { return span(ambient, m, {}); }
  static Subspace full(int ambient, int m);

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);
};

/// Right null space {x : Ax = 0}, canonical.
Subspace kernel(const Mat& a);
/// Column space of A as a subspace of Q(zeta_m)^rows.
Subspace column_space(const Mat& a);

/// Functionals vanishing on W, in dual-basis coordinates.
Subspace annihilator(const Subspace& w);

/// Fixed space V^g = ker(1 - g) and perp space (V^g)^perp = im(1 - g).
Subspace fixed_space(const Mat& g);
Subspace perp_space(const Mat& g);

/// Solve A x = b; returns std::nullopt if inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Eigen decomposition of a finite-order matrix whose order divides m.
/// Eigenvalues are zeta_m^e listed with exponents ascending; within each
/// eigenspace the basis is the canonical RREF basis.  The concatenated
/// basis vectors form the columns of P.
struct EigenDecomposition {
  std::vector<std::pair<int, Subspace>> spaces;  // (exponent e, eigenspace)
  std::vector<int> slot_exponent;                // per basis slot
  std::vector<CycNum> slot_eigenvalue;
  Mat P;     // columns are the eigenbasis in standard coordinates
  Mat Pinv;
};

EigenDecomposition eigen_decompose(const Mat& g);

}  // namespace skewcoh
