#include "mckay/hilb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace mckay {

// ---- spans ----

Span::Span(const Quotient* q, const std::vector<Poly>& gens) : q_(q) {
  for (const auto& g : gens) add(g);
}

Poly Span::normal(const Poly& p) const { return q_ ? q_->reduce(p) : p; }

Poly Span::reduce(const Poly& p) const {
  Poly r = normal(p);
  for (const auto& [piv, row] : rows_) {
    CycNum c = r.coeff(piv);
    if (!c.is_zero()) r -= row * c;
  }
  return r;
}

bool Span::add(const Poly& p) {
  Poly r = reduce(p);
  if (r.is_zero()) return false;
  r *= r.leading_coeff().inv();
  const Monomial piv = r.leading_monomial();
  for (auto& [m, row] : rows_) {
    CycNum c = row.coeff(piv);
    if (!c.is_zero()) row -= r * c;
  }
  rows_.emplace(piv, std::move(r));
  return true;
}

bool Span::contains(const Span& s) const {
  return std::all_of(s.rows_.begin(), s.rows_.end(), [&](const auto& kv) { return contains(kv.second); });
}

std::vector<Poly> Span::basis() const {
  std::vector<Poly> out;
  out.reserve(rows_.size());
  for (const auto& [m, row] : rows_) out.push_back(row);
  return out;
}

Vec Span::coords(const Poly& p) const {
  Poly r = normal(p);
  Vec v;
  v.reserve(rows_.size());
  Poly rest = r;
  for (const auto& [piv, row] : rows_) {
    v.push_back(r.coeff(piv));
    if (!v.back().is_zero()) rest -= row * v.back();
  }
  if (!rest.is_zero()) throw HilbError("coordinates requested for a polynomial outside the span");
  return v;
}

Poly Span::from_coords(const Vec& v) const {
  Poly r;
  std::size_t i = 0;
  for (const auto& [piv, row] : rows_) {
    if (!v[i].is_zero()) r += row * v[i];
    ++i;
  }
  return r;
}

Span Span::operator+(const Span& o) const {
  Span s = *this;
  for (const auto& [m, row] : o.rows_) s.add(row);
  return s;
}

std::string Span::to_string() const {
  std::string s = "(";
  bool first = true;
  for (const auto& [m, row] : rows_) {
    if (!first) s += ", ";
    s += row.to_string();
    first = false;
  }
  return s + ")";
}

Poly Quotient::reduce(const Poly& p) const {
  for (const auto& [m, c] : p.terms()) {
    const int d = m.xy_degree();
    if (built_.count(d)) continue;
    built_.insert(d);
    for (const auto& f : rel_) {
      const int k = d - f.xy_degree();
      if (k < 0) continue;
      for (const auto& mono : monomials_of_degree(k)) ideal_.add(f * Poly::monomial(mono));
    }
  }
  return ideal_.reduce(p);
}

// ---- results ----

std::string MobiusResult::text() const {
  auto form = [](const CycNum& ca, const CycNum& cb) {
    std::string s;
    auto term = [&s](const CycNum& c, const char* v) {
      if (c.is_zero()) return;
      if (!s.empty()) s += " + ";
      if (c.is_one()) {
        s += v;
      } else {
        s += "(" + c.to_string() + ")" + v;
      }
    };
    term(ca, "a");
    term(cb, "b");
    return s.empty() ? std::string("0") : s;
  };
  return "[a:b] -> [" + form(m.a, m.b) + " : " + form(m.c, m.d) + "]";
}

std::string CurveActionResult::text() const {
  switch (kind) {
    case Kind::ExchangedWith:
      return "exchanged-with E(" + partner + ")";
    case Kind::PointwiseFixed:
      return "pointwise-fixed";
    case Kind::Involution:
      return "involution";
  }
  return "";
}

bool matches_expectation(const CurveActionResult& r, const ExpectedAction& e) {
  switch (e.kind) {
    case ExpectedAction::Kind::Exchanged:
      return r.kind == CurveActionResult::Kind::ExchangedWith && r.partner == e.partner;
    case ExpectedAction::Kind::PointwiseFixed:
      return r.kind == CurveActionResult::Kind::PointwiseFixed;
    case ExpectedAction::Kind::Involution:
      return r.kind == CurveActionResult::Kind::Involution;
  }
  return false;
}

bool FamilyCheck::ok() const {
  return orbit_size > 0 && std::all_of(contains.begin(), contains.end(), [](bool b) { return b; });
}

bool IsolatedResolution::ok() const {
  return problems.empty() && std::all_of(matches.begin(), matches.end(), [](const auto& m) { return m.family >= 0; });
}

// ---- families ----

std::vector<std::pair<CycNum, CycNum>> orbit_scalars(const FiniteMatrixGroup& h, const CycNum& c, const CycNum& d) {
  if (c.is_zero() && d.is_zero()) throw HilbError("orbit of the origin");
  std::vector<std::pair<CycNum, CycNum>> out;
  std::unordered_multimap<std::size_t, std::size_t> seen;
  for (const auto& g : h.elements()) {
    std::pair<CycNum, CycNum> p{g.a * c + g.b * d, g.c * c + g.d * d};
    const std::size_t key = p.first.hash() * 1000003u ^ p.second.hash();
    auto [lo, hi] = seen.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (out[it->second] == p) throw HilbError("direction has a nontrivial stabiliser in " + h.name());
    }
    seen.emplace(key, out.size());
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<bool> family_limit_contains(const std::vector<std::pair<CycNum, CycNum>>& orbit,
                                        const std::vector<Poly>& gens) {
  std::vector<bool> out(gens.size(), false);
  if (orbit.empty()) return out;
  // The orbit is stable under the roots of unity lambda with lambda * orbit[0] in the orbit, so only
  // correction monomials of degree = deg(gen) mod k and one point per lambda-class are needed.
  const auto& [c0, d0] = orbit.front();
  std::vector<bool> dropped(orbit.size(), false);
  std::size_t k = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (orbit[i].first * d0 == orbit[i].second * c0) ++k;
  }
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (dropped[i]) continue;
    reps.push_back(i);
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      if (!dropped[j] && orbit[j].first * orbit[i].second == orbit[j].second * orbit[i].first) dropped[j] = true;
    }
  }
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].is_zero()) {
      out[g] = true;
      continue;
    }
    if (!gens[g].is_homogeneous() || gens[g].has_t()) throw HilbError("family generator must be homogeneous in x, y");
    by_degree[gens[g].degree()].push_back(g);
  }
  for (const auto& [deg, idx] : by_degree) {
    std::vector<std::pair<int, int>> unknowns;
    for (int s = 0; s < deg; ++s) {
      if ((deg - s) % static_cast<int>(k) != 0) continue;
      for (int p = s; p >= 0; --p) unknowns.emplace_back(p, s - p);
    }
    Mat a;
    a.reserve(reps.size());
    for (std::size_t r : reps) {
      const auto& [c, d] = orbit[r];
      std::vector<CycNum> pc{CycNum(1)}, pd{CycNum(1)};
      for (int e = 1; e <= deg; ++e) {
        pc.push_back(pc.back() * c);
        pd.push_back(pd.back() * d);
      }
      Vec row;
      row.reserve(unknowns.size() + idx.size());
      for (auto [p, q] : unknowns) row.push_back(pc[p] * pd[q]);
      for (std::size_t g : idx) {
        CycNum v(0);
        for (const auto& [m, coef] : gens[g].terms()) v += coef * pc[m.ex] * pd[m.ey];
        row.push_back(-v);
      }
      a.push_back(std::move(row));
    }
    const int nu = static_cast<int>(unknowns.size());
    auto piv = rref(a, nu);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      bool consistent = true;
      for (std::size_t r = piv.size(); r < a.size(); ++r) consistent = consistent && a[r][nu + j].is_zero();
      out[idx[j]] = consistent;
    }
  }
  return out;
}

bool family_limit_contains(const std::vector<std::pair<CycNum, CycNum>>& orbit, const Poly& gen) {
  return family_limit_contains(orbit, std::vector<Poly>{gen})[0];
}

// ---- engine ----

HilbEngine::HilbEngine(GroupCase c, std::uint64_t seed) : case_(std::move(c)), seed_(seed) {
  g_ = std::make_unique<FiniteMatrixGroup>(FiniteMatrixGroup::closure(case_.g_matrices(), case_.name));
  h_ = std::make_unique<FiniteMatrixGroup>(FiniteMatrixGroup::closure(case_.h_matrices(), "H"));
  for (const auto& m : h_->generator_matrices()) h_gen_inverses_.push_back(m.inverse());
  quot_ = Quotient({case_.f1, case_.f2, case_.f3});
}

const CharacterTable& HilbEngine::g_table() const {
  if (!gt_) gt_ = std::make_unique<CharacterTable>(character_table(*g_, *case_.field, seed_));
  return *gt_;
}

const CharacterTable& HilbEngine::h_table() const {
  if (!ht_) ht_ = std::make_unique<CharacterTable>(character_table(*h_, *case_.field, seed_));
  return *ht_;
}

const Quiver& HilbEngine::h_quiver() const {
  if (!hq_) hq_ = std::make_unique<Quiver>(mckay_quiver(h_table()));
  return *hq_;
}

bool HilbEngine::is_H_submodule(const Span& s) const {
  for (const auto& g : h_->generator_matrices()) {
    for (const auto& b : s.basis()) {
      if (!s.contains(act(g, b))) return false;
    }
  }
  return true;
}

std::vector<Mat> HilbEngine::generator_matrices(const Span& s) const {
  const auto basis = s.basis();
  std::vector<Mat> out;
  for (const auto& gi : h_gen_inverses_) {
    Mat m(basis.size(), Vec(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Poly img = act(gi, basis[j]);
      if (!s.contains(img)) throw HilbError("span is not an H-submodule");
      Vec col = s.coords(img);
      for (std::size_t i = 0; i < basis.size(); ++i) m[i][j] = col[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Matrices of every element of h in the representation given on the generators, following the closure words.
std::vector<Mat> all_element_matrices(const FiniteMatrixGroup& h, const std::vector<Mat>& gens, std::size_t dim) {
  std::vector<Mat> out(h.order());
  out[0] = identity_matrix(dim);
  for (std::size_t i = 1; i < h.order(); ++i) {
    out[i] = matmul(gens[h.word_gen(static_cast<int>(i))], out[h.word_parent(static_cast<int>(i))]);
  }
  return out;
}

}  // namespace

ClassFunction HilbEngine::character(const Span& s) const {
  const auto& t = h_table();
  const auto gens = generator_matrices(s);
  std::vector<std::optional<Mat>> memo(h_->order());
  std::function<const Mat&(int)> mat_of = [&](int i) -> const Mat& {
    if (!memo[i]) {
      memo[i] = i == 0 ? identity_matrix(s.dim()) : matmul(gens[h_->word_gen(i)], mat_of(h_->word_parent(i)));
    }
    return *memo[i];
  };
  ClassFunction f;
  for (int rep : t.classes.reps) f.values.push_back(trace(mat_of(rep)));
  return f;
}

std::vector<long> HilbEngine::rep_type(const Span& s) const { return decompose(h_table(), character(s)); }

int HilbEngine::irreducible_type(const Span& s) const {
  if (s.dim() == 0 || !is_H_submodule(s)) return -1;
  const auto mult = rep_type(s);
  int found = -1;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (mult[i] != 1 || found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Span HilbEngine::alpha_image(const Span& s) const {
  Span out(s.quotient());
  for (const auto& b : s.basis()) out.add(act(case_.alpha_matrix(), b));
  return out;
}

Span HilbEngine::isotypic_part(const Span& s, int irrep) const {
  const auto& t = h_table();
  const auto mats = all_element_matrices(*h_, generator_matrices(s), s.dim());
  const std::size_t n = s.dim();
  Mat p(n, Vec(n, CycNum(0)));
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const CycNum w = t.chars[irrep].values[c].conj();
    if (w.is_zero()) continue;
    for (int e : t.classes.classes[c]) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!mats[e][i][j].is_zero()) p[i][j] += w * mats[e][i][j];
        }
      }
    }
  }
  Span out(s.quotient());
  for (std::size_t j = 0; j < n; ++j) {
    Vec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = p[i][j];
    out.add(s.from_coords(col));
  }
  return out;
}

// ---- curves ----

namespace {

bool homogeneous_of_degree(const std::vector<Poly>& gens, int d) {
  return std::all_of(gens.begin(), gens.end(), [d](const Poly& g) { return g.is_homogeneous() && g.degree() == d; });
}

std::vector<int> quiver_distances(const Quiver& q, int from) {
  std::vector<int> dist(q.size(), -1);
  std::queue<int> todo;
  dist[from] = 0;
  todo.push(from);
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (std::size_t w = 0; w < q.size(); ++w) {
      if (q.adjacency[v][w] > 0 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        todo.push(static_cast<int>(w));
      }
    }
  }
  return dist;
}

}  // namespace

Span HilbEngine::point_span(const CurveParam& p, const CycNum& a, const CycNum& b) const {
  Span s(&quot_);
  for (std::size_t j = 0; j < p.u.size(); ++j) s.add(p.u[j] * a + p.v[j] * b);
  return s;
}

void HilbEngine::add_point(CurveData& cd, CurvePoint p) const {
  for (auto& q : cd.points) {
    if (q.span == p.span) {
      for (const auto& m : p.meets) {
        if (std::find(q.meets.begin(), q.meets.end(), m) == q.meets.end()) q.meets.push_back(m);
      }
      return;
    }
  }
  cd.points.push_back(std::move(p));
}

CurveData HilbEngine::build_curve(const CurveSpec& cs) const {
  CurveData cd;
  cd.spec = &cs;
  auto problem = [&cd](const std::string& s) { cd.problems.push_back(s); };
  if (cs.low) cd.low = span(cs.low->gens);
  if (cs.high) cd.high = span(cs.high->gens);
  if (!cs.ambient.empty()) {
    cd.ambient = span(cs.ambient);
  } else if (cd.low && cd.high) {
    cd.ambient = *cd.low + *cd.high;
  }
  if (cs.role != CurveRole::Center) {
    if (!cd.low || !cd.high) {
      problem("needs both low and high summands");
      return cd;
    }
    cd.irrep = irreducible_type(*cd.low);
    if (cd.irrep < 0) problem("low summand is not an irreducible H-module");
    if (irreducible_type(*cd.high) != cd.irrep) problem("high summand is not of the same irreducible type");
    add_point(cd, {"V_low", cs.low->gens, *cd.low, cs.meet_low.empty() ? std::vector<std::string>{}
                                                                     : std::vector<std::string>{cs.meet_low}});
    add_point(cd, {"V_high", cs.high->gens, *cd.high, {cs.meet_high}});
  } else {
    if (cd.low) add_point(cd, {"V_low", cs.low->gens, *cd.low, {}});
    if (cd.high) {
      add_point(cd, {"V_high", cs.high->gens, *cd.high,
                     cs.meet_high.empty() ? std::vector<std::string>{} : std::vector<std::string>{cs.meet_high}});
    }
  }
  if (cs.probe) add_point(cd, {"probe", cs.probe->gens, span(cs.probe->gens), {}});
  for (const auto& p : cs.points) add_point(cd, {p.label, p.gens, span(p.gens), {}});
  if (cs.param) {
    for (const auto& m : cs.param->meets) {
      std::vector<Poly> gens;
      for (std::size_t j = 0; j < cs.param->u.size(); ++j) gens.push_back(cs.param->u[j] * m.a + cs.param->v[j] * m.b);
      add_point(cd, {"[" + m.a.to_string() + ":" + m.b.to_string() + "]", gens, point_span(*cs.param, m.a, m.b), {m.curve}});
    }
  }
  return cd;
}

void HilbEngine::build_curves() const {
  if (curves_built_) return;
  const auto& cs_list = case_.curves;
  const CurveSpec* center = nullptr;
  for (const auto& cs : cs_list) {
    if (cs.role == CurveRole::Center) {
      if (center) throw HilbError(case_.id() + ": more than one center curve");
      center = &cs;
    }
  }
  if (!center) throw HilbError(case_.id() + ": no center curve");
  std::vector<CurveData> out;
  for (const auto& cs : cs_list) {
    if (&cs != center) out.push_back(build_curve(cs));
  }
  CurveData cd = build_curve(*center);
  const auto& q = h_quiver();
  const auto& t = h_table();

  if (cd.ambient.dim() > 0) {
    const auto mult = rep_type(cd.ambient);
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 2 && std::count(mult.begin(), mult.end(), 0L) + 1 == static_cast<long>(mult.size())) {
        cd.irrep = static_cast<int>(i);
      }
    }
    if (cd.irrep < 0) cd.problems.push_back("center ambient is not two copies of one irreducible");
  } else {
    std::vector<int> candidates;
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (t.degrees[v] != center->rep_dim || v == 0) continue;
      bool adjacent_to_all = true;
      for (const auto& other : out) {
        if (other.spec->meet_high == center->label && (other.irrep < 0 || q.adjacency[v][other.irrep] == 0)) {
          adjacent_to_all = false;
        }
      }
      if (adjacent_to_all) candidates.push_back(static_cast<int>(v));
    }
    if (candidates.size() == 1) {
      cd.irrep = candidates[0];
    } else {
      cd.problems.push_back("center irreducible not determined by its neighbours");
    }
  }

  if (cd.irrep >= 0) {
    Span computed(&quot_);
    for (const auto& other : out) {
      if (other.spec->meet_high != center->label || !other.low) continue;
      Span s1(&quot_);
      for (const auto& b : other.low->basis()) {
        s1.add(Poly::x() * b);
        s1.add(Poly::y() * b);
      }
      Span meet = isotypic_part(s1, cd.irrep);
      computed = computed + meet;
      const std::string tag = "{S1.V_low(" + other.spec->label + ")}";
      add_point(cd, {tag, meet.basis(), meet, {other.spec->label}});
    }
    if (cd.ambient.dim() == 0) cd.ambient = computed;
    for (const auto& declared : {center->meet_low, center->meet_high}) {
      if (declared.empty()) continue;
      int owners = 0;
      for (const auto& p : cd.points) {
        if (std::find(p.meets.begin(), p.meets.end(), declared) != p.meets.end()) ++owners;
      }
      if (owners != 1) cd.problems.push_back("declared meet with " + declared + " does not match the computed one");
    }
  }
  out.push_back(std::move(cd));

  const int center_irrep = out.back().irrep;
  const auto dist = center_irrep >= 0 ? quiver_distances(q, center_irrep) : std::vector<int>(q.size(), -1);
  const int half = case_.coxeter / 2;
  for (auto& c : out) {
    if (c.irrep >= 0) c.distance = dist[c.irrep];
  }
  for (auto& c : out) {
    auto problem = [&c](const std::string& s) { c.problems.push_back(s); };
    const CurveSpec& cs = *c.spec;
    if (c.irrep < 0) continue;
    if (t.degrees[c.irrep] != cs.rep_dim) problem("irreducible has dimension " + std::to_string(t.degrees[c.irrep]));
    if (cs.role == CurveRole::Center) {
      if (c.ambient.dim() != 2 * static_cast<std::size_t>(cs.rep_dim)) problem("ambient has the wrong dimension");
      if (!homogeneous_of_degree(c.ambient.basis(), half)) problem("ambient is not in degree h/2");
    } else {
      if (!homogeneous_of_degree(cs.low->gens, half - c.distance)) problem("low summand not in degree h/2 - d");
      if (!homogeneous_of_degree(cs.high->gens, half + c.distance)) problem("high summand not in degree h/2 + d");
      const bool endpoint = cs.role == CurveRole::Endpoint;
      if (endpoint != cs.meet_low.empty()) problem("meet_low must be given exactly for inner curves");
      for (const auto& o : out) {
        if (o.spec->label == cs.meet_high && o.spec->role != CurveRole::Center && o.spec->meet_low != cs.label) {
          problem("neighbour " + o.spec->label + " does not list this curve as its farther meet");
        }
        if (o.spec->label == cs.meet_high && o.irrep >= 0 && o.distance != c.distance - 1) {
          problem("meet_high is not one step closer to the center");
        }
      }
    }
    auto rep_ok = [&](const Span& s) { return irreducible_type(s) == c.irrep; };
    for (const auto& p : c.points) {
      if (!c.ambient.contains(p.span)) problem(p.tag + " is not inside the ambient module");
      if (!rep_ok(p.span)) problem(p.tag + " is not an H-submodule of the curve's type");
    }
    if (cs.probe) {
      const Span ps = span(cs.probe->gens);
      if ((c.low && ps == *c.low) || (c.high && ps == *c.high)) problem("probe coincides with a summand");
    }
    if (cs.param) {
      const std::vector<std::pair<long, long>> samples{{1, 0}, {0, 1}, {1, 1}, {2, -3}};
      for (auto [a, b] : samples) {
        Span s = point_span(*cs.param, CycNum(a), CycNum(b));
        if (!c.ambient.contains(s) || !rep_ok(s)) {
          problem("parametrised point [" + std::to_string(a) + ":" + std::to_string(b) + "] is not a curve point");
        }
      }
    }
  }
  curves_ = std::move(out);
  curves_built_ = true;
}

const std::vector<CurveData>& HilbEngine::curves() const {
  build_curves();
  return curves_;
}

const CurveData& HilbEngine::curve(const std::string& label) const {
  for (const auto& c : curves()) {
    if (c.spec->label == label) return c;
  }
  throw HilbError(case_.id() + ": no curve " + label);
}

std::optional<MobiusResult> HilbEngine::mobius(const std::string& label) const {
  const CurveData& cd = curve(label);
  if (!cd.spec->param) return std::nullopt;
  const CurveParam& par = *cd.spec->param;
  // [a':b'] with point(a', b') = alpha(point(a, b))
  auto image = [&](const CycNum& a, const CycNum& b) {
    Span img = alpha_image(point_span(par, a, b));
    std::vector<Poly> ru, rv;
    std::vector<Monomial> monos;
    for (std::size_t j = 0; j < par.u.size(); ++j) {
      ru.push_back(img.reduce(par.u[j]));
      rv.push_back(img.reduce(par.v[j]));
      for (const Poly* p : {&ru.back(), &rv.back()}) {
        for (const auto& [m, c] : p->terms()) monos.push_back(m);
      }
    }
    Mat sys;
    for (std::size_t j = 0; j < ru.size(); ++j) {
      for (const auto& m : monos) sys.push_back({ru[j].coeff(m), rv[j].coeff(m)});
    }
    std::vector<Vec> ns;
    if (sys.empty()) {
      throw HilbError(label + ": every parameter maps onto the image point");
    }
    ns = nullspace(sys);
    if (ns.size() != 1) throw HilbError(label + ": no consistent Mobius map");
    if (point_span(par, ns[0][0], ns[0][1]) != img) throw HilbError(label + ": image point is not on the curve");
    return std::pair{ns[0][0], ns[0][1]};
  };
  auto p1 = image(CycNum(1), CycNum(0));
  auto p2 = image(CycNum(0), CycNum(1));
  auto p3 = image(CycNum(1), CycNum(1));
  auto lam = solve({{p1.first, p2.first}, {p1.second, p2.second}}, {p3.first, p3.second});
  if (!lam) throw HilbError(label + ": no consistent Mobius map");
  MobiusResult r;
  r.m = {(*lam)[0] * p1.first, (*lam)[1] * p2.first, (*lam)[0] * p1.second, (*lam)[1] * p2.second};
  auto p4 = image(CycNum(1), CycNum(2));
  const CycNum ia = r.m.a + r.m.b * CycNum(2), ib = r.m.c + r.m.d * CycNum(2);
  if (ia * p4.second != ib * p4.first) throw HilbError(label + ": Mobius map fails at [1:2]");
  const CycNum norm = !r.m.c.is_zero() ? r.m.c : r.m.d;
  r.m = r.m.scaled(norm.inv());
  r.scalar = r.m.b.is_zero() && r.m.c.is_zero() && r.m.a == r.m.d;
  if (r.scalar) return r;
  const CycNum tr = r.m.trace(), det = r.m.det();
  auto root = cyc_sqrt(tr * tr - det * CycNum(4));
  if (!root) throw HilbError(label + ": eigenvalues of the Mobius map lie outside the field");
  std::vector<CycNum> eig{(tr + *root) / CycNum(2)};
  if (!root->is_zero()) eig.push_back((tr - *root) / CycNum(2));
  for (const auto& l : eig) {
    std::pair<CycNum, CycNum> v;
    if (!r.m.b.is_zero()) {
      v = {r.m.b, l - r.m.a};
    } else if (!r.m.c.is_zero()) {
      v = {l - r.m.d, r.m.c};
    } else {
      v = (l == r.m.a) ? std::pair{CycNum(1), CycNum(0)} : std::pair{CycNum(0), CycNum(1)};
    }
    if (!v.first.is_zero()) {
      v = {CycNum(1), v.second / v.first};
    } else {
      v = {CycNum(0), CycNum(1)};
    }
    r.fixed_points.push_back(v);
  }
  return r;
}

CurveActionResult HilbEngine::classify(const std::string& label) const {
  if (auto it = classified_.find(label); it != classified_.end()) return it->second;
  const CurveData& cd = curve(label);
  if (!cd.problems.empty()) throw HilbError(label + ": " + cd.problems.front());
  CurveActionResult r;
  const Span img = alpha_image(cd.ambient);
  if (img != cd.ambient) {
    r.kind = CurveActionResult::Kind::ExchangedWith;
    for (const auto& o : curves()) {
      if (&o != &cd && o.ambient == img) r.partner = o.spec->label;
    }
    if (r.partner.empty()) throw HilbError(label + ": alpha image of the ambient module is no curve's ambient");
    return classified_[label] = r;
  }
  auto meets_of = [&cd](const Span& s) {
    for (const auto& p : cd.points) {
      if (p.span == s) return p.meets;
    }
    return std::vector<std::string>{};
  };
  if (cd.spec->param) {
    r.mobius = mobius(label);
    if (r.mobius->scalar) {
      r.kind = CurveActionResult::Kind::PointwiseFixed;
      for (const auto& p : cd.points) {
        if (alpha_image(p.span) != p.span) throw HilbError(label + ": scalar Mobius map but " + p.tag + " moves");
        r.fixed.push_back(p);
      }
    } else {
      r.kind = CurveActionResult::Kind::Involution;
      const CurveParam& par = *cd.spec->param;
      for (const auto& [a, b] : r.mobius->fixed_points) {
        CurvePoint p;
        p.tag = "[" + a.to_string() + ":" + b.to_string() + "]";
        for (std::size_t j = 0; j < par.u.size(); ++j) p.gens.push_back(par.u[j] * a + par.v[j] * b);
        p.span = point_span(par, a, b);
        if (alpha_image(p.span) != p.span) throw HilbError(label + ": Mobius fixed point " + p.tag + " moves");
        p.meets = meets_of(p.span);
        r.fixed.push_back(std::move(p));
      }
    }
  } else {
    std::size_t moved = 0;
    for (const auto& p : cd.points) {
      if (alpha_image(p.span) == p.span) {
        r.fixed.push_back(p);
      } else {
        ++moved;
      }
    }
    if (moved == 0) {
      if (r.fixed.size() < 3) throw HilbError(label + ": fewer than 3 catalog points to decide pointwise fixedness");
      r.kind = CurveActionResult::Kind::PointwiseFixed;
    } else {
      if (r.fixed.size() >= 3) throw HilbError(label + ": three fixed points but alpha moves a fourth");
      r.kind = CurveActionResult::Kind::Involution;
    }
  }
  if (r.kind == CurveActionResult::Kind::Involution) {
    for (const auto& p : r.fixed) {
      if (p.meets.empty()) r.isolated.push_back(p);
    }
  }
  return classified_[label] = r;
}

std::vector<std::string> HilbEngine::failed_identities() const {
  std::vector<std::string> out;
  for (const auto& id : case_.identities) {
    if (!identity_holds(case_, id)) out.push_back(id.matrix + ": " + id.text);
  }
  for (const auto& c : case_.curves) {
    for (const auto& id : c.identities) {
      if (!identity_holds(case_, id)) out.push_back(c.label + " " + id.matrix + ": " + id.text);
    }
  }
  return out;
}

bool HilbEngine::alpha_squared_identity_on_ambients() const {
  const Mat2 a2 = case_.alpha_matrix() * case_.alpha_matrix();
  for (const auto& c : curves()) {
    Span img(&quot_);
    for (const auto& b : c.ambient.basis()) img.add(act(a2, b));
    if (img != c.ambient || alpha_image(alpha_image(c.ambient)) != c.ambient) return false;
  }
  return true;
}

std::vector<std::pair<CycNum, CycNum>> HilbEngine::orbit(const FamilySpec& f) const {
  auto it = orbits_.find(f.direction);
  if (it == orbits_.end()) it = orbits_.emplace(f.direction, orbit_scalars(*h_, f.c, f.d)).first;
  return it->second;
}

std::vector<bool> HilbEngine::cached_contains(const FamilySpec& f, const std::vector<Poly>& gens) const {
  std::vector<bool> out(gens.size());
  std::vector<Poly> todo;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto it = limit_cache_.find(f.direction + "|" + gens[i].to_string());
    if (it != limit_cache_.end()) {
      out[i] = it->second;
    } else {
      todo.push_back(gens[i]);
      where.push_back(i);
    }
  }
  if (todo.empty()) return out;
  const auto res = family_limit_contains(orbit(f), todo);
  for (std::size_t j = 0; j < todo.size(); ++j) {
    out[where[j]] = res[j];
    limit_cache_[f.direction + "|" + todo[j].to_string()] = res[j];
  }
  return out;
}

FamilyCheck HilbEngine::check_family(const FamilySpec& f) const {
  FamilyCheck fc;
  fc.direction = f.direction;
  const auto orb = orbit(f);
  fc.orbit_size = orb.size();
  if (orb.size() != h_->order()) fc.orbit_size = 0;
  fc.contains = cached_contains(f, f.gens);
  return fc;
}

IsolatedResolution HilbEngine::isolated_point_resolution() const {
  IsolatedResolution res;
  struct Witness {
    std::string curve;
    CurvePoint point;
  };
  std::vector<Witness> witnesses;
  for (const auto& c : curves()) {
    for (const auto& p : classify(c.spec->label).isolated) witnesses.push_back({c.spec->label, p});
  }
  std::vector<bool> listed(case_.isolated.size(), false);
  for (const auto& w : witnesses) {
    bool found = false;
    for (std::size_t i = 0; i < case_.isolated.size(); ++i) {
      if (case_.isolated[i].curve == w.curve && span(case_.isolated[i].gens) == w.point.span) {
        listed[i] = found = true;
      }
    }
    if (!found) res.problems.push_back("isolated point " + w.point.span.to_string() + " on " + w.curve + " is not listed");
  }
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (!listed[i]) res.problems.push_back("listed isolated point on " + case_.isolated[i].curve + " was not found");
  }
  const std::size_t nf = case_.families.size();
  std::vector<std::vector<bool>> ok(witnesses.size(), std::vector<bool>(nf, false));
  std::vector<bool> family_ok(nf);
  for (std::size_t f = 0; f < nf; ++f) family_ok[f] = check_family(case_.families[f]).ok();
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    for (std::size_t f = 0; f < nf; ++f) {
      if (!family_ok[f]) continue;
      const auto in = cached_contains(case_.families[f], witnesses[w].point.gens);
      ok[w][f] = std::all_of(in.begin(), in.end(), [](bool b) { return b; });
    }
  }
  std::vector<int> perm(nf);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best(witnesses.size(), -1);
  if (witnesses.size() == nf) {
    do {
      bool all = true;
      for (std::size_t w = 0; w < witnesses.size(); ++w) all = all && ok[w][perm[w]];
      if (all) {
        for (std::size_t w = 0; w < witnesses.size(); ++w) best[w] = perm[w];
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    res.problems.push_back(std::to_string(witnesses.size()) + " isolated points but " + std::to_string(nf) + " families");
  }
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    res.matches.push_back({witnesses[w].curve, witnesses[w].point.span.to_string(), best[w]});
  }
  return res;
}

}  // namespace mckay
