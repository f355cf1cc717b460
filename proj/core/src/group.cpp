#include "skewcoh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace skewcoh {

namespace {

constexpr int kEagerTableLimit = 1024;

struct MatLess {
  bool operator()(const Mat& a, const Mat& b) const { return Mat::compare(a, b) < 0; }
};

long lcm_long(long a, long b) { return std::lcm(a, b); }

std::string permutation_cycles(const Mat& m) {
  const int n = m.rows();
  std::vector<int> image(n, -1);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (m.at(r, c).is_one()) image[c] = r;
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || image[i] == i) {
      seen[i] = true;
      continue;
    }
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
      j = image[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

std::string diagonal_name(const Mat& m) {
  std::ostringstream os;
  os << "diag(";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << m.at(i, i).str();
  }
  os << ")";
  return os.str();
}

bool is_diagonal(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::close(std::vector<Mat> defining_gens,
                               std::vector<Mat> action_gens, int cap) {
  if (defining_gens.empty()) throw InputError("close: no generators given");
  if (action_gens.empty()) action_gens = defining_gens;
  if (action_gens.size() != defining_gens.size())
    throw InputError("close: generator and action lists differ in length");

  // Harmonize all matrices to one cyclotomic modulus.
  long m0 = 1;
  for (const auto& g : defining_gens) m0 = lcm_long(m0, g.modulus());
  for (const auto& g : action_gens) m0 = lcm_long(m0, g.modulus());
  const int n_def = defining_gens[0].rows();
  const int n_act = action_gens[0].rows();
  for (auto& g : defining_gens) {
    if (g.rows() != n_def || g.cols() != n_def)
      throw InputError("close: defining generators are not square of equal size");
    g = g.embedded(static_cast<int>(m0));
  }
  for (auto& g : action_gens) {
    if (g.rows() != n_act || g.cols() != n_act)
      throw InputError("close: action generators are not square of equal size");
    g = g.embedded(static_cast<int>(m0));
  }
  for (const auto& g : defining_gens) {
    try {
      (void)g.inverse();
    } catch (const InputError&) {
      throw InputError("close: a generator is not invertible");
    }
  }

  // Deterministic generator order: sort by defining matrix, drop duplicates
  // and identity generators (the identity is seeded as element 0).
  std::vector<std::pair<Mat, Mat>> gens;
  for (std::size_t i = 0; i < defining_gens.size(); ++i)
    gens.emplace_back(defining_gens[i], action_gens[i]);
  std::sort(gens.begin(), gens.end(),
            [](const auto& a, const auto& b) { return Mat::compare(a.first, b.first) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             gens.end());
  std::erase_if(gens, [](const auto& g) { return g.first.is_identity(); });

  FiniteGroup grp;
  grp.dim_ = n_act;

  std::vector<Mat> defs, acts;
  std::map<Mat, int, MatLess> index_of;
  defs.push_back(Mat::identity(n_def, static_cast<int>(m0)));
  acts.push_back(Mat::identity(n_act, static_cast<int>(m0)));
  index_of.emplace(defs[0], 0);

  const int n_gens = static_cast<int>(gens.size());
  std::vector<std::vector<int>> prod_gen;  // prod_gen[i][s] = index of elem_i * gen_s
  prod_gen.push_back(std::vector<int>(n_gens, -1));
  std::vector<int> parent_of{-1}, gen_of{-1};

  for (std::size_t i = 0; i < defs.size(); ++i) {
    for (int s = 0; s < n_gens; ++s) {
      Mat d = defs[i] * gens[s].first;
      auto it = index_of.find(d);
      int idx;
      if (it != index_of.end()) {
        idx = it->second;
      } else {
        idx = static_cast<int>(defs.size());
        if (idx >= cap)
          throw InputError("close: group order exceeds cap " + std::to_string(cap));
        index_of.emplace(d, idx);
        defs.push_back(std::move(d));
        acts.push_back(acts[i] * gens[s].second);
        prod_gen.push_back(std::vector<int>(n_gens, -1));
        parent_of.push_back(static_cast<int>(i));
        gen_of.push_back(s);
      }
      prod_gen[i][s] = idx;
    }
  }

  const int order = static_cast<int>(defs.size());

  // Multiplication by index.  With the eager table we use the BFS word
  // structure: every j > 0 satisfies j = parent(j) * gen(j), so
  // table[i][j] = table[table[i][parent]][gen] once columns are filled in
  // discovery order.
  if (order <= kEagerTableLimit) {
    grp.table_.assign(order, std::vector<int>(order, -1));
    for (int i = 0; i < order; ++i) grp.table_[i][0] = i;
    for (int j = 1; j < order; ++j) {
      int p = parent_of[j], s = gen_of[j];
      for (int i = 0; i < order; ++i)
        grp.table_[i][j] = prod_gen[grp.table_[i][p]][s];
    }
  }

  auto idx_mult = [&](int i, int j) {
    if (!grp.table_.empty()) return grp.table_[i][j];
    return index_of.at(defs[i] * defs[j]);
  };

  grp.inv_.assign(order, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      if (idx_mult(i, j) == 0) {
        grp.inv_[i] = j;
        break;
      }
    }
  }

  std::vector<int> orders(order, 1);
  long exponent = 1;
  for (int i = 1; i < order; ++i) {
    int t = 1, acc = i;
    while (acc != 0) {
      acc = idx_mult(acc, i);
      ++t;
    }
    orders[i] = t;
    exponent = lcm_long(exponent, t);
  }
  grp.exponent_ = static_cast<int>(exponent);

  const int m = static_cast<int>(lcm_long(m0, exponent));
  grp.modulus_ = m;

  grp.elems_.resize(order);
  for (int i = 0; i < order; ++i) {
    GroupElement& e = grp.elems_[i];
    e.index = i;
    e.defining = (m == m0) ? std::move(defs[i]) : defs[i].embedded(m);
    e.action = (m == m0) ? std::move(acts[i]) : acts[i].embedded(m);
    e.order = orders[i];
  }

  grp.finalize();
  return grp;
}

void FiniteGroup::finalize() {
  const int n = dim_;
  const int m = modulus_;
  const int order = size();

  for (GroupElement& e : elems_) {
    e.det = e.action.det();
    e.det_exponent = e.det.root_of_unity_exponent();
    if (e.det_exponent < 0)
      throw VerificationError("group element determinant is not a root of unity");
    e.fixed = fixed_space(e.action);
    e.perp = perp_space(e.action);
    e.codim = e.perp.dim();
    if (e.fixed.dim() + e.codim != n)
      throw VerificationError("fixed/perp dimensions do not sum to dim V");
    e.ann_fixed = annihilator(e.fixed);
    e.ann_perp = annihilator(e.perp);
    e.eigen = eigen_decompose(e.action);
    e.action_order = 1;
    for (int expo : e.eigen.slot_exponent)
      if (expo != 0)
        e.action_order = static_cast<int>(
            std::lcm<long>(e.action_order, m / std::gcd(expo, m)));

    // Split coordinates: rows of `fixed` and `perp` bases together form a
    // basis of V; to_split reads off the V^g-part of a vector.
    const int k = e.fixed.dim();
    Mat combined(n, n, m);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) combined.at(r, c) = e.fixed.basis[r][c];
    for (int r = 0; r < e.codim; ++r)
      for (int c = 0; c < n; ++c) combined.at(k + r, c) = e.perp.basis[r][c];
    Mat coords = combined.transpose().inverse();
    e.to_split = Mat(k, n, m);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) e.to_split.at(r, c) = coords.at(r, c);
    e.from_split = Mat(n, k, m);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < k; ++c) e.from_split.at(r, c) = e.fixed.basis[c][r];
    e.proj_fixed = e.from_split * e.to_split;

    if (e.defining.is_identity())
      e.name = "e";
    else if (e.defining.is_permutation())
      e.name = permutation_cycles(e.defining);
    else if (is_diagonal(e.defining))
      e.name = diagonal_name(e.defining);
    else
      e.name = "g" + std::to_string(e.index);
  }

  kernel_.clear();
  for (int i = 0; i < order; ++i)
    if (elems_[i].action.is_identity()) kernel_.push_back(i);

  class_of_.assign(order, -1);
  classes_.clear();
  for (int i = 0; i < order; ++i) {
    if (class_of_[i] >= 0) continue;
    ConjugacyClass cls;
    cls.representative = i;
    int id = static_cast<int>(classes_.size());
    for (int h = 0; h < order; ++h) {
      int c = conjugate(h, i);
      if (class_of_[c] < 0) {
        class_of_[c] = id;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    for (int h = 0; h < order; ++h)
      if (mult(h, i) == mult(i, h)) cls.centralizer.push_back(h);
    classes_.push_back(std::move(cls));
  }

  var_names_.clear();
  for (int i = 0; i < n; ++i) var_names_.push_back("x" + std::to_string(i + 1));
}

int FiniteGroup::mult(int i, int j) const {
  if (!table_.empty()) return table_[i][j];
  Mat d = elems_[i].defining * elems_[j].defining;
  int idx = find(d);
  if (idx < 0) throw VerificationError("mult: product escaped the group");
  return idx;
}

int FiniteGroup::conjugate(int h, int g) const {
  return mult(mult(h, g), inv_[h]);
}

bool FiniteGroup::in_kernel(int i) const {
  return std::binary_search(kernel_.begin(), kernel_.end(), i);
}

int FiniteGroup::find(const Mat& defining) const {
  for (const auto& e : elems_)
    if (e.defining == defining) return e.index;
  return -1;
}

std::vector<int> FiniteGroup::double_cosets(const std::vector<int>& left,
                                            const std::vector<int>& right) const {
  std::vector<bool> marked(size(), false);
  std::vector<int> reps;
  for (int i = 0; i < size(); ++i) {
    if (marked[i]) continue;
    reps.push_back(i);
    for (int l : left)
      for (int r : right) marked[mult(mult(l, i), r)] = true;
  }
  return reps;
}

std::vector<int> FiniteGroup::subgroup_generated_by(const std::vector<int>& gens) const {
  std::vector<bool> in(size(), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int g : gens) {
      int w = mult(queue[q], g);
      if (!in[w]) {
        in[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> FiniteGroup::left_coset_representatives(
    const std::vector<int>& super, const std::vector<int>& sub) const {
  std::vector<bool> marked(size(), false);
  std::vector<int> reps;
  for (int l : super) {
    if (marked[l]) continue;
    reps.push_back(l);
    for (int s : sub) marked[mult(l, s)] = true;
  }
  return reps;
}

std::vector<int> FiniteGroup::reflections() const {
  std::vector<int> out;
  for (const auto& e : elems_)
    if (e.codim == 1) out.push_back(e.index);
  return out;
}

void FiniteGroup::set_variable_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != dim_)
    throw InputError("set_variable_names: wrong number of names");
  var_names_ = std::move(names);
}

FiniteGroup build_symmetric(int n, int copies, int trivial_summands,
                            int trivial_kernel_factor, int cap) {
  if (n < 1 || copies < 1 || trivial_summands < 0)
    throw InputError("build_symmetric: invalid parameters");
  const int dim = n * copies + trivial_summands;
  auto perm_matrix = [&](const std::vector<int>& image) {
    Mat M(dim, dim, 1);
    for (int p = 0; p < n; ++p)
      for (int c = 0; c < copies; ++c)
        M.at(image[p] * copies + c, p * copies + c) = CycNum::one(1);
    for (int t = 0; t < trivial_summands; ++t) {
      int i = n * copies + t;
      M.at(i, i) = CycNum::one(1);
    }
    return M;
  };

  std::vector<Mat> gens;
  if (n == 1) {
    gens.push_back(Mat::identity(dim, 1));
  } else {
    std::vector<int> swap01(n);
    for (int i = 0; i < n; ++i) swap01[i] = i;
    std::swap(swap01[0], swap01[1]);
    gens.push_back(perm_matrix(swap01));
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(perm_matrix(cycle));
  }

  std::vector<Mat> action_gens;
  if (trivial_kernel_factor > 1)
    append_trivial_kernel_factor(gens, action_gens, trivial_kernel_factor);
  FiniteGroup g = FiniteGroup::close(gens, action_gens, cap);

  std::vector<std::string> names;
  static const char* kCopyPrefix[] = {"v", "w", "u", "y"};
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < copies; ++c) {
      std::string prefix =
          copies <= 4 ? kCopyPrefix[c] : "x" + std::to_string(c) + "_";
      names.push_back(prefix + std::to_string(p + 1));
    }
  for (int t = 0; t < trivial_summands; ++t)
    names.push_back("t" + std::to_string(t + 1));
  g.set_variable_names(std::move(names));
  return g;
}

FiniteGroup build_grpn(int r, int p, int n, int cap) {
  if (r < 1 || p < 1 || n < 1 || r % p != 0)
    throw InputError("build_grpn: require r,p,n >= 1 and p | r");
  std::vector<Mat> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Mat M = Mat::identity(n, r);
    M.at(i, i) = CycNum::zero(r);
    M.at(i + 1, i + 1) = CycNum::zero(r);
    M.at(i, i + 1) = CycNum::one(r);
    M.at(i + 1, i) = CycNum::one(r);
    gens.push_back(std::move(M));
  }
  {
    Mat d = Mat::identity(n, r);
    d.at(0, 0) = CycNum::zeta(r, p);
    gens.push_back(std::move(d));
  }
  if (n >= 2) {
    Mat d = Mat::identity(n, r);
    d.at(0, 0) = CycNum::zeta(r, 1);
    d.at(1, 1) = CycNum::zeta(r, -1);
    gens.push_back(std::move(d));
  }
  std::erase_if(gens, [](const Mat& g) { return g.is_identity(); });
  if (gens.empty()) gens.push_back(Mat::identity(n, 1));

  FiniteGroup g = FiniteGroup::close(gens, {}, cap);

  long expected = 1;  // r^n * n! / p
  for (int i = 0; i < n; ++i) expected *= r;
  for (int i = 2; i <= n; ++i) expected *= i;
  expected /= p;
  if (g.size() != expected)
    throw VerificationError("build_grpn: closure order " + std::to_string(g.size()) +
                            " differs from r^n n!/p = " + std::to_string(expected));
  return g;
}

FiniteGroup build_cyclic_diag(const std::vector<int>& orders, int cap) {
  if (orders.empty()) throw InputError("build_cyclic_diag: no orders given");
  const int k = static_cast<int>(orders.size());
  long m0 = 1;
  for (int o : orders) {
    if (o < 1) throw InputError("build_cyclic_diag: orders must be positive");
    m0 = lcm_long(m0, o);
  }
  std::vector<Mat> gens;
  for (int i = 0; i < k; ++i) {
    if (orders[i] == 1) continue;
    Mat d = Mat::identity(k, static_cast<int>(m0));
    d.at(i, i) = CycNum::zeta(static_cast<int>(m0), m0 / orders[i]);
    gens.push_back(std::move(d));
  }
  if (gens.empty()) gens.push_back(Mat::identity(k, 1));
  return FiniteGroup::close(gens, {}, cap);
}

void append_trivial_kernel_factor(std::vector<Mat>& defining_gens,
                                  std::vector<Mat>& action_gens, int t) {
  if (t < 2) throw InputError("append_trivial_kernel_factor: need t >= 2");
  if (action_gens.empty()) action_gens = defining_gens;
  const int n_act = action_gens[0].rows();
  long m0 = t;
  for (const auto& g : defining_gens) m0 = lcm_long(m0, g.modulus());
  for (auto& g : defining_gens) g = g.embedded(static_cast<int>(m0));
  for (auto& g : action_gens) g = g.embedded(static_cast<int>(m0));

  std::vector<Mat> new_defs;
  for (const auto& g : defining_gens) {
    Mat d(g.rows() + 1, g.cols() + 1, static_cast<int>(m0));
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) d.at(i, j) = g.at(i, j);
    d.at(g.rows(), g.cols()) = CycNum::one(static_cast<int>(m0));
    new_defs.push_back(std::move(d));
  }
  {
    Mat d = Mat::identity(defining_gens[0].rows() + 1, static_cast<int>(m0));
    d.at(defining_gens[0].rows(), defining_gens[0].rows()) =
        CycNum::zeta(static_cast<int>(m0), m0 / t);
    new_defs.push_back(std::move(d));
    action_gens.push_back(Mat::identity(n_act, static_cast<int>(m0)));
  }
  defining_gens = std::move(new_defs);
}

}  // namespace skewcoh
