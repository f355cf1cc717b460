#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewcoh/linalg.hpp"

namespace skewcoh {

/// Exponent vectors are packed into a 64-bit key, one byte per variable
/// (so at most 8 variables and per-variable degree < 256; desk scale).
/// Monomial multiplication is then integer addition.
using MonoKey = std::uint64_t;

constexpr int kMaxPolyVars = 8;

MonoKey mono_from_exponents(const std::vector<int>& e);
std::vector<int> mono_exponents(MonoKey k, int n);
inline int mono_exp(MonoKey k, int i) { return static_cast<int>((k >> (8 * i)) & 0xFF); }
int mono_total_degree(MonoKey k, int n);
inline MonoKey mono_mul(MonoKey a, MonoKey b) { return a + b; }

/// All monomials of the given total degree in n variables, sorted by key.
std::vector<MonoKey> monomials_of_degree(int n, int d);

/// Multivariate polynomial over Q(zeta_m) in n variables (a basis of V).
class Poly {
 public:
  Poly() : n_(0), m_(1) {}
  Poly(int n, int m);

  static Poly zero(int n, int m) { return Poly(n, m); }
  static Poly constant(int n, int m, const CycNum& c);
  static Poly one(int n, int m) { return constant(n, m, CycNum::one(m)); }
  static Poly variable(int n, int m, int i);
  /// Linear form sum_i coords[i] * x_i.
  static Poly linear(int n, int m, const Vec& coords);
  static Poly monomial(int n, int m, MonoKey k, const CycNum& c);

  int vars() const { return n_; }
  int modulus() const { return m_; }
  const std::map<MonoKey, CycNum>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  void add_term(MonoKey k, const CycNum& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const CycNum& c) const;
  Poly& operator+=(const Poly& o);

  CycNum coeff(MonoKey k) const;

  /// Substitution x_i |-> sum_r M(r, i) * y_r, mapping into M.rows() target
  /// variables.  Applies a monomial fast path when every image is a scalar
  /// multiple of a single variable.
  Poly substituted(const Mat& M) const;

  /// Terms of the given total degree.
  Poly homogeneous_component(int d) const;

  bool operator==(const Poly& o) const {
    return n_ == o.n_ && m_ == o.m_ && t_ == o.t_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  int n_, m_;
  std::map<MonoKey, CycNum> t_;
};

}  // namespace skewcoh
