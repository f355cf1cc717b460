#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcoh/errors.hpp"

namespace skewcoh {

using Rational = boost::multiprecision::mpq_rational;

int euler_phi(int m);

/// Monic coefficients (ascending powers) of the m-th cyclotomic polynomial.
const std::vector<Rational>& cyclotomic_polynomial(int m);

/// An element of the cyclotomic field Q(zeta_m), stored canonically as its
/// coordinate vector of length phi(m) in the power basis 1, z, ..., z^{phi-1}
/// reduced modulo the m-th cyclotomic polynomial.  Values are immutable and
/// two elements are equal iff their moduli and coordinate vectors agree.
class CycNum {
 public:
  CycNum() : m_(1), c_(1, Rational(0)) {}

  static CycNum zero(int m);
  static CycNum one(int m);
  static CycNum from_rational(const Rational& r, int m);
  static CycNum from_int(long v, int m) { return from_rational(Rational(v), m); }
  /// zeta_m^e
  static CycNum zeta(int m, long e = 1);
  /// Canonical reduction of sum_j raw[j] * zeta_m^j (raw of arbitrary length).
  static CycNum from_power_coeffs(int m, const std::vector<Rational>& raw);

  int modulus() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws InputError unless is_rational()

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const;  // throws InputError if o == 0
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum scaled(const Rational& r) const;
  CycNum inverse() const;  // throws InputError on zero
  CycNum pow(long e) const;

  /// Image under the canonical embedding Q(zeta_m) -> Q(zeta_{new_m}),
  /// zeta_m |-> zeta_{new_m}^{new_m/m}.  Requires m | new_m.
  CycNum embedded(int new_m) const;

  bool operator==(const CycNum& o) const { return m_ == o.m_ && c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  /// Deterministic total order (modulus, then coordinatewise).
  static int compare(const CycNum& a, const CycNum& b);

  /// If this equals zeta_m^e for some 0 <= e < m, returns e; otherwise -1.
  int root_of_unity_exponent() const;

  /// Smallest t >= 1 with this^t == 1, or -1 if none up to the given bound.
  int multiplicative_order(int bound) const;

  std::size_t hash() const;

  /// Human-readable polynomial in z, e.g. "1/2-z^2".  No spaces.
  std::string str() const;

  /// Coordinates as "p/q" strings (the wire format, paired with modulus()).
  std::vector<std::string> coeff_strings() const;
  static CycNum from_coeff_strings(int m, const std::vector<std::string>& parts);

 private:
  CycNum(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  void require_same_modulus(const CycNum& o) const;

  int m_;
  std::vector<Rational> c_;
};

}  // namespace skewcoh
