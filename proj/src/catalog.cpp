#include "mckay/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mckay {

namespace {

struct Line {
  std::string key;
  std::string cond;
  std::string value;
  int lineno = 0;
};

struct Section {
  bool is_case = false;
  std::string label;
  std::vector<Line> lines;
};

std::vector<Section> read_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file " + path);
  std::vector<Section> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[' && s.back() == ']' && s.find('=') == std::string::npos) {
      std::string head = trim(s.substr(1, s.size() - 2));
      Section sec;
      if (head.rfind("case ", 0) == 0) {
        sec.is_case = true;
        sec.label = trim(head.substr(5));
      } else if (head.rfind("curve ", 0) == 0) {
        sec.label = trim(head.substr(6));
      } else {
        throw CatalogError("line " + std::to_string(lineno) + ": unknown section '" + head + "'");
      }
      out.push_back(std::move(sec));
      continue;
    }
    if (out.empty()) throw CatalogError("line " + std::to_string(lineno) + ": entry outside a section");
    auto eq = s.find('=');
    if (eq == std::string::npos) throw CatalogError("line " + std::to_string(lineno) + ": expected key = value");
    Line l;
    l.lineno = lineno;
    l.value = trim(s.substr(eq + 1));
    std::string lhs = trim(s.substr(0, eq));
    if (auto b = lhs.find('['); b != std::string::npos) {
      auto e = lhs.find(']', b);
      if (e == std::string::npos) throw CatalogError("line " + std::to_string(lineno) + ": unclosed condition");
      l.cond = trim(lhs.substr(b + 1, e - b - 1));
      lhs = trim(lhs.substr(0, b));
    }
    l.key = lhs;
    out.back().lines.push_back(std::move(l));
  }
  return out;
}

bool condition_holds(const std::string& cond, const std::map<std::string, long>& ints, int lineno) {
  if (cond.empty()) return true;
  std::istringstream is(cond);
  std::string var, parity;
  is >> var >> parity;
  auto it = ints.find(var);
  if (it == ints.end() || (parity != "odd" && parity != "even")) {
    throw CatalogError("line " + std::to_string(lineno) + ": bad condition '" + cond + "'");
  }
  const bool odd = (it->second % 2 + 2) % 2 == 1;
  return parity == "odd" ? odd : !odd;
}

std::pair<std::string, std::string> split_once(const std::string& s, const std::string& sep) {
  auto p = s.find(sep);
  if (p == std::string::npos) return {trim(s), ""};
  return {trim(s.substr(0, p)), trim(s.substr(p + sep.size()))};
}

class Loader {
 public:
  Loader(GroupCase& c, std::map<std::string, long> ints) : c_(c), ints_(std::move(ints)) {}

  void case_line(const Line& l) {
    if (!condition_holds(l.cond, ints_, l.lineno)) return;
    try {
      handle_case(l);
    } catch (const ParseError& e) {
      throw CatalogError("line " + std::to_string(l.lineno) + ": " + e.what());
    }
    c_.source.emplace_back(l.key, expand(l.value));
  }

  void curve_section(const Section& sec) {
    std::vector<Line> lines = sec.lines;
    if (!lines.empty() && lines.front().key.rfind("range ", 0) == 0) {
      const std::string var = trim(lines.front().key.substr(6));
      auto [from, to] = split_once(lines.front().value, "..");
      const long lo = parse_int(from, ints_), hi = parse_int(to, ints_);
      lines.erase(lines.begin());
      for (long k = lo; k <= hi; ++k) {
        ints_[var] = k;
        env_.ints[var] = k;
        one_curve(sec.label, lines);
      }
      ints_.erase(var);
      env_.ints.erase(var);
      return;
    }
    one_curve(sec.label, lines);
  }

  void finish() {
    if (!c_.field) throw CatalogError(c_.key + ": missing conductor");
    for (const auto& n : c_.g_gens) require_matrix(n);
    for (const auto& n : c_.h_gens) require_matrix(n);
    require_matrix(c_.alpha);
  }

 private:
  std::string expand(const std::string& s) const { return expand_braces(s, ints_); }

  void require_matrix(const std::string& n) const {
    if (!c_.matrices.count(n)) throw CatalogError(c_.key + ": unknown matrix '" + n + "'");
  }

  Poly poly(const std::string& s) const { return parse_poly(s, env_); }

  std::vector<Poly> poly_list(const std::string& s) const {
    std::vector<Poly> out;
    for (const auto& part : split_top_level(s, ',')) out.push_back(poly(part));
    return out;
  }

  CycNum constant(const std::string& s) const {
    Poly p = poly(s);
    if (!p.is_constant()) throw ParseError("expected a constant: '" + s + "'");
    return p.coeff({}).in_field(*c_.field);
  }

  Poly with_ab(const std::string& s, const CycNum& a, const CycNum& b) const {
    ParseEnv env = env_;
    env.symbols["a"] = Poly(a);
    env.symbols["b"] = Poly(b);
    return parse_poly(s, env);
  }

  Identity identity(const std::string& value) const {
    auto [mat, rest] = split_once(value, ":");
    auto [lhs, rhs] = split_once(rest, "->");
    if (rhs.empty()) throw ParseError("identity needs 'matrix : lhs -> rhs'");
    Identity id;
    id.matrix = mat;
    if (mat.size() > 2 && mat.compare(mat.size() - 2, 2, "^T") == 0) {
      id.matrix = trim(mat.substr(0, mat.size() - 2));
      id.transpose = true;
    }
    require_matrix(id.matrix);
    id.text = lhs + " -> " + rhs;
    for (auto [a, b] : {std::pair{1L, 0L}, {0L, 1L}, {2L, -3L}}) {
      id.samples.emplace_back(with_ab(lhs, CycNum(a), CycNum(b)), with_ab(rhs, CycNum(a), CycNum(b)));
    }
    return id;
  }

  ExpectedAction expectation(const std::string& value) const {
    std::istringstream is(value);
    std::string kind, partner;
    is >> kind >> partner;
    ExpectedAction e;
    if (kind == "pointwise") {
      e.kind = ExpectedAction::Kind::PointwiseFixed;
    } else if (kind == "involution") {
      e.kind = ExpectedAction::Kind::Involution;
    } else if (kind == "exchanged" && !partner.empty()) {
      e.kind = ExpectedAction::Kind::Exchanged;
      e.partner = expand(partner);
    } else {
      throw ParseError("bad expectation '" + value + "'");
    }
    return e;
  }

  void handle_case(const Line& l) {
    const std::string& k = l.key;
    const std::string& v = l.value;
    if (k == "name") {
      c_.name = expand(v);
    } else if (k == "conductor") {
      c_.conductor = static_cast<int>(parse_int(v, ints_));
      ints_["N"] = c_.conductor;
      c_.field = &CycField::get(c_.conductor);
      env_.field = c_.field;
      env_.ints = ints_;
    } else if (k == "coxeter") {
      c_.coxeter = static_cast<int>(parse_int(v, ints_));
    } else if (k == "count_only") {
      c_.count_only = v == "true";
    } else if (k.rfind("let ", 0) == 0) {
      env_.symbols[trim(k.substr(4))] = poly(v);
    } else if (k.rfind("mat ", 0) == 0) {
      c_.matrices[trim(k.substr(4))] = parse_mat2(v, env_);
    } else if (k == "G" || k == "H") {
      std::vector<std::string>& dst = k == "G" ? c_.g_gens : c_.h_gens;
      dst = split_top_level(v, ',');
    } else if (k == "alpha") {
      c_.alpha = v;
    } else if (k == "f1" || k == "f2" || k == "f3") {
      (k == "f1" ? c_.f1 : k == "f2" ? c_.f2 : c_.f3) = poly(v);
    } else if (k == "relation" || k == "factor") {
      ParseEnv uv = env_;
      uv.symbols["u"] = Poly::x();
      uv.symbols["v"] = Poly::y();
      Poly p = parse_poly(v, uv);
      if (k == "relation") {
        c_.relation = p;
      } else {
        c_.factors.push_back(p);
      }
    } else if (k == "unit") {
      c_.unit = constant(v);
    } else if (k == "identity") {
      c_.identities.push_back(identity(v));
    } else if (k == "family") {
      auto [dir, gens] = split_once(v, "->");
      std::string inner = dir;
      if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')') throw ParseError("family direction needs (c, d)");
      auto cd = split_top_level(inner.substr(1, inner.size() - 2), ',');
      if (cd.size() != 2) throw ParseError("family direction needs two entries");
      FamilySpec f;
      f.direction = dir;
      f.c = constant(cd[0]);
      f.d = constant(cd[1]);
      f.gens = poly_list(gens);
      c_.families.push_back(std::move(f));
    } else if (k == "isolated") {
      auto [curve, gens] = split_once(v, ":");
      c_.isolated.push_back({expand(curve), poly_list(gens)});
    } else if (k == "order_G") {
      c_.order_g = parse_int(v, ints_);
    } else if (k == "order_H") {
      c_.order_h = parse_int(v, ints_);
    } else if (k == "center_order") {
      c_.center_order = parse_int(v, ints_);
    } else if (k == "irreps") {
      c_.irreps = parse_int(v, ints_);
    } else if (k == "r") {
      c_.r = parse_int(v, ints_);
    } else if (k == "n") {
      c_.n = parse_int(v, ints_);
    } else if (k == "quiver_H") {
      c_.quiver_h = expand(v);
    } else {
      throw ParseError("unknown case key '" + k + "'");
    }
  }

  void one_curve(const std::string& raw_label, const std::vector<Line>& lines) {
    CurveSpec cs;
    cs.label = expand(raw_label);
    bool have_expect = false;
    for (const auto& l : lines) {
      if (!condition_holds(l.cond, ints_, l.lineno)) continue;
      try {
        const std::string& k = l.key;
        const std::string& v = l.value;
        if (k == "role") {
          if (v == "endpoint") {
            cs.role = CurveRole::Endpoint;
          } else if (v == "inner") {
            cs.role = CurveRole::Inner;
          } else if (v == "center") {
            cs.role = CurveRole::Center;
          } else {
            throw ParseError("bad role '" + v + "'");
          }
        } else if (k == "rep") {
          cs.rep_dim = static_cast<int>(parse_int(v, ints_));
        } else if (k == "low" || k == "high") {
          VModule vm{k, poly_list(v)};
          (k == "low" ? cs.low : cs.high) = std::move(vm);
        } else if (k == "ambient") {
          cs.ambient = poly_list(v);
        } else if (k == "meet_low") {
          cs.meet_low = expand(v);
        } else if (k == "meet_high") {
          cs.meet_high = expand(v);
        } else if (k == "probe") {
          cs.probe = VModule{"probe", poly_list(v)};
        } else if (k == "point") {
          cs.points.push_back({"point " + std::to_string(cs.points.size() + 1), poly_list(v)});
        } else if (k == "param") {
          CurveParam p;
          for (const auto& g : split_top_level(v, ',')) {
            Poly u = with_ab(g, CycNum(1), CycNum(0));
            Poly w = with_ab(g, CycNum(0), CycNum(1));
            if (with_ab(g, CycNum(2), CycNum(-3)) != u * CycNum(2) - w * CycNum(3)) {
              throw ParseError("parametrisation is not linear in a, b: '" + g + "'");
            }
            p.u.push_back(u);
            p.v.push_back(w);
          }
          cs.param = std::move(p);
        } else if (k == "param_meet") {
          if (!cs.param) throw ParseError("param_meet before param");
          auto close = v.find(']');
          if (v.empty() || v.front() != '[' || close == std::string::npos) throw ParseError("param_meet needs [a : b] curve");
          auto [a, b] = split_once(v.substr(1, close - 1), ":");
          cs.param->meets.push_back({constant(a), constant(b), expand(trim(v.substr(close + 1)))});
        } else if (k == "identity") {
          cs.identities.push_back(identity(v));
        } else if (k == "expect") {
          cs.expect = expectation(v);
          have_expect = true;
        } else {
          throw ParseError("unknown curve key '" + k + "'");
        }
      } catch (const ParseError& e) {
        throw CatalogError("line " + std::to_string(l.lineno) + ": " + e.what());
      }
    }
    if (!have_expect) throw CatalogError(c_.key + ": curve " + cs.label + " has no expectation");
    if (cs.rep_dim <= 0) throw CatalogError(c_.key + ": curve " + cs.label + " has no rep dimension");
    c_.curves.push_back(std::move(cs));
  }

  GroupCase& c_;
  std::map<std::string, long> ints_;
  ParseEnv env_;
};

}  // namespace

std::vector<Mat2> GroupCase::g_matrices() const {
  std::vector<Mat2> out;
  for (const auto& n : g_gens) out.push_back(matrices.at(n));
  return out;
}

std::vector<Mat2> GroupCase::h_matrices() const {
  std::vector<Mat2> out;
  for (const auto& n : h_gens) out.push_back(matrices.at(n));
  return out;
}

const CurveSpec* GroupCase::curve(const std::string& label) const {
  for (const auto& c : curves) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::string GroupCase::id() const { return m > 0 ? key + "_m" + std::to_string(m) : key; }

const std::vector<std::string>& case_keys() {
  static const std::vector<std::string> keys{"gmm2", "g2mm2", "g12", "g13", "g22"};
  return keys;
}

bool needs_m(const std::string& key) { return key == "gmm2" || key == "g2mm2"; }

std::string default_catalog_path() { return std::string(MCKAY_DATA_DIR) + "/cases.dat"; }

GroupCase get_case(const std::string& key, int m, const std::string& path) {
  if (std::find(case_keys().begin(), case_keys().end(), key) == case_keys().end()) {
    throw CatalogError("unknown group '" + key + "'");
  }
  if (needs_m(key) && (m < 3 || m > 12)) throw CatalogError(key + " needs 3 <= m <= 12, got " + std::to_string(m));
  if (!needs_m(key)) m = 0;
  const auto sections = read_sections(path.empty() ? default_catalog_path() : path);
  GroupCase c;
  c.key = key;
  c.m = m;
  std::map<std::string, long> ints;
  if (m > 0) ints["m"] = m;
  Loader loader(c, ints);
  bool found = false;
  for (const auto& sec : sections) {
    if (sec.is_case) {
      if (found) break;
      if (sec.label != key) continue;
      found = true;
      for (const auto& l : sec.lines) loader.case_line(l);
      continue;
    }
    if (found) loader.curve_section(sec);
  }
  if (!found) throw CatalogError("catalog has no case '" + key + "'");
  loader.finish();
  return c;
}

Poly relation_defect(const GroupCase& c) { return c.f3 * c.f3 - compose(c.relation, c.f1, c.f2); }

bool verify_relation(const GroupCase& c) { return relation_defect(c).is_zero(); }

int verify_branch_factorization(const GroupCase& c) {
  Poly prod(c.unit);
  for (const auto& f : c.factors) prod = prod * f;
  if (prod != -c.relation) {
    throw CatalogError(c.id() + ": branch factors multiply to " + prod.to_string() + ", expected " +
                       (-c.relation).to_string());
  }
  return static_cast<int>(c.factors.size());
}

bool identity_holds(const GroupCase& c, const Identity& id) {
  Mat2 g = c.matrices.at(id.matrix);
  if (id.transpose) std::swap(g.b, g.c);
  return std::all_of(id.samples.begin(), id.samples.end(), [&](const auto& s) { return act(g, s.first) == s.second; });
}

std::string curve_role_name(CurveRole r) {
  switch (r) {
    case CurveRole::Endpoint:
      return "endpoint";
    case CurveRole::Inner:
      return "inner";
    case CurveRole::Center:
      return "center";
  }
  return "";
}

std::string expected_action_text(const ExpectedAction& e) {
  switch (e.kind) {
    case ExpectedAction::Kind::Exchanged:
      return "exchanged-with E(" + e.partner + ")";
    case ExpectedAction::Kind::PointwiseFixed:
      return "pointwise-fixed";
    case ExpectedAction::Kind::Involution:
      return "involution";
  }
  return "";
}

}  // namespace mckay
