#include "skewcoh/exterior.hpp"

#include <bit>
#include <sstream>

namespace skewcoh {

int wedge_sign(FormMask a, FormMask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with i > j.
  int inversions = 0;
  FormMask bb = b;
  while (bb) {
    FormMask low = bb & (~bb + 1);
    int j = std::countr_zero(low);
    inversions += std::popcount(a >> (j + 1));
    bb ^= low;
  }
  return (inversions & 1) ? -1 : 1;
}

ExtForm ExtForm::scalar(int n, int m, const CycNum& c) {
  ExtForm f(n, m);
  f.add_term(0, c);
  return f;
}

ExtForm ExtForm::dual_basis(int n, int m, int i) {
  ExtForm f(n, m);
  f.add_term(FormMask(1) << i, CycNum::one(m));
  return f;
}

ExtForm ExtForm::one_form(int n, int m, const Vec& coords) {
  ExtForm f(n, m);
  for (int i = 0; i < n; ++i)
    if (!coords[i].is_zero()) f.add_term(FormMask(1) << i, coords[i]);
  return f;
}

bool ExtForm::is_homogeneous() const {
  if (t_.empty()) return true;
  int p = std::popcount(t_.begin()->first);
  for (const auto& [mask, c] : t_)
    if (std::popcount(mask) != p) return false;
  return true;
}

int ExtForm::degree() const {
  if (t_.empty()) return 0;
  if (!is_homogeneous()) throw InputError("ExtForm: degree of inhomogeneous form");
  return std::popcount(t_.begin()->first);
}

void ExtForm::add_term(FormMask mask, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = t_.find(mask);
  if (it == t_.end()) {
    t_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

ExtForm ExtForm::operator+(const ExtForm& o) const {
  ExtForm r = *this;
  for (const auto& [mask, c] : o.t_) r.add_term(mask, c);
  return r;
}

ExtForm ExtForm::operator-(const ExtForm& o) const {
  ExtForm r = *this;
  for (const auto& [mask, c] : o.t_) r.add_term(mask, -c);
  return r;
}

ExtForm ExtForm::operator-() const {
  ExtForm r(n_, m_);
  for (const auto& [mask, c] : t_) r.t_.emplace(mask, -c);
  return r;
}

ExtForm ExtForm::scaled(const CycNum& c) const {
  ExtForm r(n_, m_);
  if (c.is_zero()) return r;
  for (const auto& [mask, x] : t_) {
    CycNum y = x * c;
    if (!y.is_zero()) r.t_.emplace(mask, std::move(y));
  }
  return r;
}

ExtForm ExtForm::wedge(const ExtForm& o) const {
  if (n_ != o.n_) throw InputError("ExtForm: ambient mismatch in wedge");
  ExtForm r(n_, m_);
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : o.t_) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      CycNum c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  }
  return r;
}

CycNum ExtForm::coeff(FormMask mask) const {
  auto it = t_.find(mask);
  return it == t_.end() ? CycNum::zero(m_) : it->second;
}

Vec ExtForm::coordinates(int p) const {
  std::vector<FormMask> masks = masks_of_degree(n_, p);
  Vec out;
  out.reserve(masks.size());
  for (FormMask mk : masks) out.push_back(coeff(mk));
  for (const auto& [mask, c] : t_) {
    (void)c;
    if (std::popcount(mask) != p)
      throw InputError("ExtForm: coordinates of inhomogeneous form");
  }
  return out;
}

std::string ExtForm::str(const std::vector<std::string>& var_names) const {
  if (t_.empty()) return "0";
  auto name = [&](int i) {
    return i < static_cast<int>(var_names.size()) ? var_names[i]
                                                  : "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : t_) {
    std::string cs = c.str();
    if (!first && !cs.empty() && cs[0] != '-') os << "+";
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    std::string wedge_part;
    FormMask mm = mask;
    while (mm) {
      int i = std::countr_zero(mm);
      if (!wedge_part.empty()) wedge_part += "^";
      wedge_part += name(i) + "*";
      mm &= mm - 1;
    }
    if (wedge_part.empty()) {
      os << (composite && !first ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      os << wedge_part;
    } else if (cs == "-1") {
      os << "-" << wedge_part;
    } else {
      os << (composite ? "(" + cs + ")" : cs) << "*" << wedge_part;
    }
    first = false;
  }
  return os.str();
}

std::vector<FormMask> masks_of_degree(int n, int p) {
  std::vector<FormMask> out;
  if (p < 0 || p > n) return out;
  for (FormMask mask = 0; mask < (FormMask(1) << n); ++mask)
    if (std::popcount(mask) == p) out.push_back(mask);
  return out;
}

ExtForm form_action_by_inverse(const Mat& h_inverse, const ExtForm& w) {
  const int n = w.ambient();
  const int m = w.modulus();
  ExtForm out(n, m);
  for (const auto& [mask, c] : w.terms()) {
    ExtForm acc = ExtForm::scalar(n, m, c);
    FormMask mm = mask;
    while (mm) {
      int i = std::countr_zero(mm);
      acc = acc.wedge(ExtForm::one_form(n, m, h_inverse.row(i)));
      mm &= mm - 1;
    }
    out = out + acc;
  }
  return out;
}

}  // namespace skewcoh
