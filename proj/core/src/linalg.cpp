#include "skewcoh/linalg.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>

namespace skewcoh {

Mat::Mat(int rows, int cols, int m)
    : rows_(rows), cols_(cols), m_(m),
      e_(static_cast<std::size_t>(rows) * cols, CycNum::zero(m)) {}

Mat Mat::identity(int n, int m) {
  Mat r(n, n, m);
  for (int i = 0; i < n; ++i) r.at(i, i) = CycNum::one(m);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw InputError("Mat: dimension mismatch in product");
  Mat r(rows_, o.cols_, m_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const CycNum& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycNum& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("Mat: dimension mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("Mat: dimension mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_, m_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::scaled(const CycNum& c) const {
  Mat r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Mat Mat::pow(long e) const {
  if (rows_ != cols_) throw InputError("Mat: pow of non-square matrix");
  if (e < 0) return inverse().pow(-e);
  Mat acc = identity(rows_, m_), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("Mat: apply size mismatch");
  Vec r(rows_, CycNum::zero(m_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Vec Mat::row(int r) const {
  Vec v(cols_, CycNum::zero(m_));
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(rows_, CycNum::zero(m_));
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_permutation() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    int ones = 0;
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_one())
        ++ones;
      else if (!at(i, j).is_zero())
        return false;
    }
    if (ones != 1) return false;
  }
  for (int j = 0; j < cols_; ++j) {
    int ones = 0;
    for (int i = 0; i < rows_; ++i)
      if (at(i, j).is_one()) ++ones;
    if (ones != 1) return false;
  }
  return true;
}

bool Mat::is_monomial() const {
  if (rows_ != cols_) return false;
  for (int j = 0; j < cols_; ++j) {
    int nz = 0;
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) ++nz;
    if (nz != 1) return false;
  }
  for (int i = 0; i < rows_; ++i) {
    int nz = 0;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) ++nz;
    if (nz != 1) return false;
  }
  return true;
}

Mat Mat::embedded(int new_m) const {
  Mat r(rows_, cols_, new_m);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).embedded(new_m);
  return r;
}

int Mat::compare(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    int c = CycNum::compare(a.e_[i], b.e_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t Mat::hash() const {
  std::size_t seed = boost::hash<int>()(rows_);
  boost::hash_combine(seed, cols_);
  for (const auto& x : e_) boost::hash_combine(seed, x.hash());
  return seed;
}

std::vector<int> rref(std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    CycNum inv = rows[r][c].inverse();
    for (int j = c; j < ncols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      CycNum f = rows[i][c];
      for (int j = c; j < ncols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw InputError("Mat: inverse of non-square matrix");
  std::vector<Vec> aug(rows_);
  for (int i = 0; i < rows_; ++i) {
    aug[i].assign(2 * cols_, CycNum::zero(m_));
    for (int j = 0; j < cols_; ++j) aug[i][j] = at(i, j);
    aug[i][cols_ + i] = CycNum::one(m_);
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != rows_ || piv.back() >= cols_)
    throw InputError("Mat: singular matrix has no inverse");
  Mat r(rows_, cols_, m_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = aug[i][cols_ + j];
  return r;
}

CycNum Mat::det() const {
  if (rows_ != cols_) throw InputError("Mat: det of non-square matrix");
  std::vector<Vec> rows(rows_);
  for (int i = 0; i < rows_; ++i) rows[i] = row(i);
  CycNum d = CycNum::one(m_);
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return CycNum::zero(m_);
    if (sel != r) {
      std::swap(rows[r], rows[sel]);
      d = -d;
    }
    d *= rows[r][c];
    CycNum inv = rows[r][c].inverse();
    for (int j = c; j < cols_; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (int i = r + 1; i < rows_; ++i) {
      if (rows[i][c].is_zero()) continue;
      CycNum f = rows[i][c];
      for (int j = c; j < cols_; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r == rows_ ? d : CycNum::zero(m_);
}

Subspace Subspace::span(int ambient, int m, std::vector<Vec> vectors) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient)
      throw InputError("Subspace: vector length does not match ambient dimension");
  }
  rref(vectors);
  Subspace s;
  s.ambient = ambient;
  s.m = m;
  s.basis = std::move(vectors);
  return s;
}

Subspace Subspace::full(int ambient, int m) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient, CycNum::zero(m));
    v[i] = CycNum::one(m);
    rows.push_back(std::move(v));
  }
  return span(ambient, m, std::move(rows));
}

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  // Reduce against the RREF basis.
  for (const auto& b : basis) {
    int p = 0;
    while (p < ambient && b[p].is_zero()) ++p;
    if (p < ambient && !w[p].is_zero()) {
      CycNum f = w[p];
      for (int j = p; j < ambient; ++j)
        if (!b[j].is_zero()) w[j] -= f * b[j];
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis)
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw InputError("Subspace: ambient mismatch in sum");
  std::vector<Vec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return span(a.ambient, a.m, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw InputError("Subspace: ambient mismatch in intersect");
  // X cap Y = Ann(Ann X + Ann Y) under the double-dual identification.
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace kernel(const Mat& a) {
  std::vector<Vec> rows(a.rows());
  for (int i = 0; i < a.rows(); ++i) rows[i] = a.row(i);
  std::vector<int> piv = rref(rows);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_piv[c]) continue;
    Vec v(a.cols(), CycNum::zero(a.modulus()));
    v[c] = CycNum::one(a.modulus());
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][c];
    basis.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), a.modulus(), std::move(basis));
}

Subspace column_space(const Mat& a) {
  std::vector<Vec> rows(a.cols());
  for (int j = 0; j < a.cols(); ++j) rows[j] = a.col(j);
  return Subspace::span(a.rows(), a.modulus(), std::move(rows));
}

Subspace annihilator(const Subspace& w) {
  Mat a(w.dim(), w.ambient, w.m);
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.ambient; ++j) a.at(i, j) = w.basis[i][j];
  return kernel(a);
}

Subspace fixed_space(const Mat& g) {
  return kernel(Mat::identity(g.rows(), g.modulus()) - g);
}

Subspace perp_space(const Mat& g) {
  return column_space(Mat::identity(g.rows(), g.modulus()) - g);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InputError("solve: size mismatch");
  std::vector<Vec> aug(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    aug[i].assign(a.cols() + 1, CycNum::zero(a.modulus()));
    for (int j = 0; j < a.cols(); ++j) aug[i][j] = a.at(i, j);
    aug[i][a.cols()] = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), CycNum::zero(a.modulus()));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][a.cols()];
  return x;
}

EigenDecomposition eigen_decompose(const Mat& g) {
  const int n = g.rows();
  const int m = g.modulus();
  if (g.rows() != g.cols()) throw InputError("eigen_decompose: non-square matrix");

  // Order of the matrix; eigenvalues of a finite-order element are m-th
  // roots of unity, so the order divides m once the modulus is the group
  // exponent.
  int ord = -1;
  Mat acc = g;
  for (int t = 1; t <= m; ++t) {
    if (acc.is_identity()) {
      ord = t;
      break;
    }
    acc = acc * g;
  }
  if (ord < 0)
    throw InputError("eigen_decompose: matrix order does not divide the modulus");

  std::vector<Mat> powers;
  powers.reserve(ord);
  powers.push_back(Mat::identity(n, m));
  for (int j = 1; j < ord; ++j) powers.push_back(powers.back() * g);

  EigenDecomposition ed;
  ed.P = Mat(n, n, m);
  Rational inv_ord = Rational(1) / ord;
  int slot = 0;
  for (int t = 0; t < ord; ++t) {
    int e = t * (m / ord);
    // Projector onto the zeta^e eigenspace: (1/ord) sum_j zeta^{-ej} g^j.
    Mat proj(n, n, m);
    for (int j = 0; j < ord; ++j) {
      CycNum w = CycNum::zeta(m, -static_cast<long>(e) * j).scaled(inv_ord);
      proj = proj + powers[j].scaled(w);
    }
    Subspace space = column_space(proj);
    if (space.dim() == 0) continue;
    CycNum lam = CycNum::zeta(m, e);
    for (const auto& v : space.basis) {
      for (int i = 0; i < n; ++i) ed.P.at(i, slot) = v[i];
      ed.slot_exponent.push_back(e);
      ed.slot_eigenvalue.push_back(lam);
      ++slot;
    }
    ed.spaces.emplace_back(e, std::move(space));
  }
  if (slot != n)
    throw VerificationError("eigen_decompose: eigenspace dimensions do not sum to n");
  ed.Pinv = ed.P.inverse();
  return ed;
}

}  // namespace skewcoh
