#include "skewcoh/cyclotomic.hpp"

#include <boost/functional/hash.hpp>
#include <map>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skewcoh {

namespace {

// Dense univariate polynomials over Q, ascending coefficients.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Quotient and in-place remainder of a by b (b nonzero).
QPoly divmod(QPoly& a, const QPoly& b) {
  QPoly q;
  trim(a);
  int db = degree(b);
  if (degree(a) >= db) q.assign(a.size() - b.size() + 1, Rational(0));
  while (degree(a) >= db) {
    int shift = degree(a) - db;
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return q;
}

QPoly sub_scaled(const QPoly& a, const QPoly& b, const Rational& c) {
  QPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= c * b[i];
  trim(r);
  return r;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw InputError("euler_phi: modulus must be positive");
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int m) {
  static std::map<int, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw InputError("cyclotomic_polynomial: modulus must be positive");

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively
  // within the cache (divisors are strictly smaller).
  std::function<const QPoly&(int)> get = [&](int k) -> const QPoly& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    QPoly num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      const QPoly& phd = get(d);
      QPoly rem = num;
      QPoly q = divmod(rem, phd);
      if (!rem.empty()) throw VerificationError("cyclotomic_polynomial: inexact division");
      num = std::move(q);
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

CycNum CycNum::zero(int m) {
  if (m < 1) throw InputError("CycNum: modulus must be positive");
  return CycNum(m, std::vector<Rational>(euler_phi(m), Rational(0)));
}

CycNum CycNum::one(int m) { return from_rational(Rational(1), m); }

CycNum CycNum::from_rational(const Rational& r, int m) {
  CycNum z = zero(m);
  z.c_[0] = r;
  return z;
}

CycNum CycNum::zeta(int m, long e) {
  e %= m;
  if (e < 0) e += m;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw[static_cast<std::size_t>(e)] = 1;
  return from_power_coeffs(m, raw);
}

CycNum CycNum::from_power_coeffs(int m, const std::vector<Rational>& raw) {
  if (m < 1) throw InputError("CycNum: modulus must be positive");
  const QPoly& phi = cyclotomic_polynomial(m);
  int deg_phi = degree(phi);
  QPoly r = raw;
  trim(r);
  // First fold exponents mod m (x^m = 1), then reduce modulo Phi_m.
  if (degree(r) >= m) {
    QPoly folded(m, Rational(0));
    for (std::size_t j = 0; j < r.size(); ++j) folded[j % m] += r[j];
    r = std::move(folded);
    trim(r);
  }
  while (degree(r) >= deg_phi) {
    int shift = degree(r) - deg_phi;
    Rational c = r.back();
    for (int i = 0; i <= deg_phi; ++i) r[shift + i] -= c * phi[i];
    trim(r);
  }
  r.resize(deg_phi, Rational(0));
  return CycNum(m, std::move(r));
}

void CycNum::require_same_modulus(const CycNum& o) const {
  if (m_ != o.m_)
    throw InputError("CycNum: mixed moduli " + std::to_string(m_) + " and " +
                     std::to_string(o.m_));
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw InputError("CycNum: value is not rational");
  return c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
  require_same_modulus(o);
  std::vector<Rational> r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return CycNum(m_, std::move(r));
}

CycNum CycNum::operator-(const CycNum& o) const {
  require_same_modulus(o);
  std::vector<Rational> r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return CycNum(m_, std::move(r));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return CycNum(m_, std::move(r));
}

CycNum CycNum::operator*(const CycNum& o) const {
  require_same_modulus(o);
  QPoly a = c_, b = o.c_;
  trim(a);
  trim(b);
  return from_power_coeffs(m_, mul(a, b));
}

CycNum CycNum::scaled(const Rational& r) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= r;
  return CycNum(m_, std::move(v));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw InputError("CycNum: division by zero");
  if (is_rational()) return from_rational(Rational(1) / c_[0], m_);
  // Extended Euclid in Q[x]: u*a + v*Phi = gcd = const, inverse = u/gcd.
  QPoly a = c_;
  trim(a);
  QPoly r0 = cyclotomic_polynomial(m_), r1 = a;
  QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of a
  while (degree(r1) > 0) {
    QPoly rem = r0;
    QPoly q = divmod(rem, r1);
    QPoly s2 = s0;
    // s2 = s0 - q*s1
    QPoly qs = mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw VerificationError("CycNum: gcd vanished in inverse");
  Rational g = r1[0];
  for (auto& x : s1) x /= g;
  return from_power_coeffs(m_, s1);
}

CycNum CycNum::operator/(const CycNum& o) const {
  require_same_modulus(o);
  return *this * o.inverse();
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this, acc = one(m_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycNum CycNum::embedded(int new_m) const {
  if (new_m == m_) return *this;
  if (new_m < 1 || new_m % m_ != 0)
    throw InputError("CycNum: cannot embed modulus " + std::to_string(m_) +
                     " into " + std::to_string(new_m));
  int step = new_m / m_;
  std::vector<Rational> raw(static_cast<std::size_t>(euler_phi(m_) - 1) * step + 1,
                            Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) raw[j * step] = c_[j];
  return from_power_coeffs(new_m, raw);
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
  }
  return 0;
}

int CycNum::root_of_unity_exponent() const {
  for (int e = 0; e < m_; ++e) {
    if (*this == zeta(m_, e)) return e;
  }
  return -1;
}

int CycNum::multiplicative_order(int bound) const {
  CycNum acc = *this;
  for (int t = 1; t <= bound; ++t) {
    if (acc.is_one()) return t;
    acc = acc * *this;
  }
  return -1;
}

std::size_t CycNum::hash() const {
  std::size_t seed = boost::hash<int>()(m_);
  for (const auto& x : c_) boost::hash_combine(seed, x);
  return seed;
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational coeff = c_[j];
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? "-" : "+");
      if (coeff < 0) coeff = -coeff;
    }
    bool unit = (coeff == 1) && j > 0;
    if (!unit) os << coeff.str();
    if (j > 0) {
      if (!unit) os << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::string> CycNum::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.str());
  return out;
}

CycNum CycNum::from_coeff_strings(int m, const std::vector<std::string>& parts) {
  std::vector<Rational> raw;
  raw.reserve(parts.size());
  for (const auto& s : parts) {
    try {
      raw.emplace_back(s);
    } catch (const std::exception&) {
      throw InputError("CycNum: bad rational literal '" + s + "'");
    }
  }
  return from_power_coeffs(m, raw);
}

}  // namespace skewcoh
