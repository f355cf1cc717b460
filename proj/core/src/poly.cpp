#include "skewcoh/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skewcoh {

MonoKey mono_from_exponents(const std::vector<int>& e) {
  if (static_cast<int>(e.size()) > kMaxPolyVars)
    throw InputError("Poly: more than 8 variables is not supported");
  MonoKey k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw InputError("Poly: exponent out of range");
    k |= static_cast<MonoKey>(e[i]) << (8 * i);
  }
  return k;
}

std::vector<int> mono_exponents(MonoKey k, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = mono_exp(k, i);
  return e;
}

int mono_total_degree(MonoKey k, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += mono_exp(k, i);
  return d;
}

std::vector<MonoKey> monomials_of_degree(int n, int d) {
  std::vector<MonoKey> out;
  std::vector<int> e(n, 0);
  // Lexicographic enumeration of compositions of d into n parts.
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == n - 1) {
      e[pos] = rest;
      out.push_back(mono_from_exponents(e));
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      e[pos] = v;
      rec(pos + 1, rest - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Poly::Poly(int n, int m) : n_(n), m_(m) {
  if (n > kMaxPolyVars) throw InputError("Poly: more than 8 variables is not supported");
}

Poly Poly::constant(int n, int m, const CycNum& c) {
  Poly p(n, m);
  p.add_term(0, c);
  return p;
}

Poly Poly::variable(int n, int m, int i) {
  Poly p(n, m);
  p.add_term(MonoKey(1) << (8 * i), CycNum::one(m));
  return p;
}

Poly Poly::linear(int n, int m, const Vec& coords) {
  Poly p(n, m);
  for (int i = 0; i < n; ++i)
    if (!coords[i].is_zero()) p.add_term(MonoKey(1) << (8 * i), coords[i]);
  return p;
}

Poly Poly::monomial(int n, int m, MonoKey k, const CycNum& c) {
  Poly p(n, m);
  p.add_term(k, c);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : t_) {
    (void)c;
    d = std::max(d, mono_total_degree(k, n_));
  }
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [k, c] : t_) {
    (void)c;
    int dk = mono_total_degree(k, n_);
    if (d < 0) d = dk;
    if (dk != d) return false;
  }
  return true;
}

void Poly::add_term(MonoKey k, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(n_, m_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_) throw InputError("Poly: variable count mismatch");
  Poly r(n_, m_);
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_) r.add_term(mono_mul(ka, kb), ca * cb);
  return r;
}

Poly Poly::scaled(const CycNum& c) const {
  Poly r(n_, m_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : t_) {
    CycNum y = x * c;
    if (!y.is_zero()) r.t_.emplace(k, std::move(y));
  }
  return r;
}

CycNum Poly::coeff(MonoKey k) const {
  auto it = t_.find(k);
  return it == t_.end() ? CycNum::zero(m_) : it->second;
}

Poly Poly::substituted(const Mat& M) const {
  if (M.cols() != n_) throw InputError("Poly: substitution matrix has wrong shape");
  const int n_out = M.rows();

  // Monomial fast path: every variable maps to c * single target variable.
  bool monomial_map = true;
  std::vector<int> target(n_, -1);
  std::vector<CycNum> scale(n_, CycNum::zero(m_));
  for (int i = 0; i < n_ && monomial_map; ++i) {
    int nz = -1;
    for (int r = 0; r < n_out; ++r) {
      if (M.at(r, i).is_zero()) continue;
      if (nz >= 0) {
        monomial_map = false;
        break;
      }
      nz = r;
    }
    if (nz < 0) monomial_map = false;  // variable maps to zero: rare, use slow path
    if (monomial_map) {
      target[i] = nz;
      scale[i] = M.at(nz, i);
    }
  }
  if (monomial_map) {
    Poly r(n_out, m_);
    for (const auto& [k, c] : t_) {
      CycNum cc = c;
      MonoKey kk = 0;
      for (int i = 0; i < n_; ++i) {
        int e = mono_exp(k, i);
        if (e == 0) continue;
        kk += static_cast<MonoKey>(e) << (8 * target[i]);
        if (!scale[i].is_one()) cc *= scale[i].pow(e);
      }
      r.add_term(kk, cc);
    }
    return r;
  }

  std::vector<Poly> images;
  images.reserve(n_);
  for (int i = 0; i < n_; ++i) images.push_back(Poly::linear(n_out, m_, M.col(i)));
  Poly r(n_out, m_);
  for (const auto& [k, c] : t_) {
    Poly term = Poly::constant(n_out, m_, c);
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(k, i);
      for (int j = 0; j < e; ++j) term = term * images[i];
    }
    r += term;
  }
  return r;
}

Poly Poly::homogeneous_component(int d) const {
  Poly r(n_, m_);
  for (const auto& [k, c] : t_)
    if (mono_total_degree(k, n_) == d) r.t_.emplace(k, c);
  return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
  if (t_.empty()) return "0";
  auto name = [&](int i) {
    return i < static_cast<int>(var_names.size()) ? var_names[i]
                                                  : "x" + std::to_string(i + 1);
  };
  // Graded order: total degree descending, then key ascending.
  std::vector<std::pair<MonoKey, CycNum>> terms(t_.begin(), t_.end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int da = mono_total_degree(a.first, n_), db = mono_total_degree(b.first, n_);
    if (da != db) return da > db;
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string cs = c.str();
    if (!first && !cs.empty() && cs[0] != '-') os << "+";
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(k, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << (composite && !first ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << mono;
    } else if (cs == "-1") {
      os << "-" << mono;
    } else {
      os << (composite ? "(" + cs + ")" : cs) << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace skewcoh
