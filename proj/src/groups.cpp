#include "mckay/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

namespace mckay {

FiniteMatrixGroup FiniteMatrixGroup::closure(const std::vector<Mat2>& gens, std::string name, std::size_t cap) {
  FiniteMatrixGroup g;
  g.name_ = std::move(name);
  g.gens_ = gens;
  for (const auto& m : gens) {
    if (m.det().is_zero()) throw std::invalid_argument("generator of " + g.name_ + " is singular");
  }
  const Mat2 id = Mat2::identity();
  g.elems_.push_back(id);
  g.parent_.push_back(-1);
  g.via_.push_back(-1);
  g.index_.emplace(id, 0);
  for (std::size_t i = 0; i < g.elems_.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Mat2 p = gens[k] * g.elems_[i];
      if (g.index_.count(p)) continue;
      if (g.elems_.size() >= cap) {
        throw ClosureOverflow("closure of " + g.name_ + " exceeded " + std::to_string(cap) + " elements");
      }
      g.index_.emplace(p, static_cast<int>(g.elems_.size()));
      g.elems_.push_back(std::move(p));
      g.parent_.push_back(static_cast<int>(i));
      g.via_.push_back(static_cast<int>(k));
    }
  }
  g.inv_.resize(g.elems_.size());
  for (std::size_t i = 0; i < g.elems_.size(); ++i) {
    int j = g.index_of(g.elems_[i].inverse());
    if (j < 0) throw std::logic_error("closure of " + g.name_ + " is not closed under inverses");
    g.inv_[i] = j;
  }
  return g;
}

int FiniteMatrixGroup::index_of(const Mat2& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int FiniteMatrixGroup::mul(int i, int j) const {
  int k = index_of(elems_[i] * elems_[j]);
  if (k < 0) throw std::logic_error("product left the group " + name_);
  return k;
}

int FiniteMatrixGroup::element_order(int i) const {
  int o = 1;
  int cur = i;
  while (cur != 0) {
    cur = mul(cur, i);
    ++o;
  }
  return o;
}

int FiniteMatrixGroup::exponent() const {
  int e = 1;
  for (std::size_t i = 0; i < elems_.size(); ++i) e = std::lcm(e, element_order(static_cast<int>(i)));
  return e;
}

const CycField* FiniteMatrixGroup::field() const {
  for (const auto& m : gens_) {
    for (const CycNum* v : {&m.a, &m.b, &m.c, &m.d}) {
      if (v->field()) return v->field();
    }
  }
  return nullptr;
}

FiniteMatrixGroup det_one_subgroup(const FiniteMatrixGroup& g) {
  std::vector<int> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.element(static_cast<int>(i)).det().is_one()) members.push_back(static_cast<int>(i));
  }
  std::vector<Mat2> gens;
  FiniteMatrixGroup h = FiniteMatrixGroup::closure(gens, g.name() + "_sl2");
  for (int i : members) {
    if (h.contains(g.element(i))) continue;
    gens.push_back(g.element(i));
    h = FiniteMatrixGroup::closure(gens, g.name() + "_sl2");
  }
  if (h.order() != members.size()) throw std::logic_error("determinant-one elements do not form a subgroup");
  return h;
}

ConjClasses conjugacy_classes(const FiniteMatrixGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> gen_idx;
  for (const auto& m : g.generator_matrices()) gen_idx.push_back(g.index_of(m));
  std::vector<int> seen(n, -1);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < n; ++s) {
    if (seen[s] >= 0) continue;
    std::vector<int> part{s};
    seen[s] = static_cast<int>(parts.size());
    for (std::size_t q = 0; q < part.size(); ++q) {
      for (int k : gen_idx) {
        int c = g.mul(g.mul(k, part[q]), g.inverse(k));
        if (seen[c] < 0) {
          seen[c] = static_cast<int>(parts.size());
          part.push_back(c);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  std::vector<std::tuple<int, std::size_t, int, std::size_t>> keys;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    keys.emplace_back(g.element_order(parts[p][0]), parts[p].size(), parts[p][0], p);
  }
  std::sort(keys.begin(), keys.end());
  ConjClasses cc;
  cc.class_of.assign(n, -1);
  for (const auto& key : keys) {
    const auto& part = parts[std::get<3>(key)];
    for (int e : part) cc.class_of[e] = static_cast<int>(cc.classes.size());
    cc.reps.push_back(part[0]);
    cc.classes.push_back(part);
  }
  return cc;
}

bool is_reflection(const Mat2& m) {
  if (m.is_identity()) return false;
  Mat2 d{m.a - CycNum(1), m.b, m.c, m.d - CycNum(1)};
  return d.det().is_zero();
}

int reflection_classes(const FiniteMatrixGroup& g, const ConjClasses& cc) {
  int count = 0;
  for (int r : cc.reps) {
    if (is_reflection(g.element(r))) ++count;
  }
  return count;
}

std::vector<int> center(const FiniteMatrixGroup& g) {
  std::vector<int> out;
  std::vector<int> gen_idx;
  for (const auto& m : g.generator_matrices()) gen_idx.push_back(g.index_of(m));
  for (std::size_t i = 0; i < g.order(); ++i) {
    const int e = static_cast<int>(i);
    bool central = true;
    for (int k : gen_idx) {
      if (g.mul(k, e) != g.mul(e, k)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(e);
  }
  return out;
}

}  // namespace mckay
