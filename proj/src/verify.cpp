#include "mckay/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace mckay {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  " << c.detail << "\n";
  os << group << ": " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"id", c.id}, {"paper_anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  j["summary"] = {{"pass", passed()}, {"fail", failed()}, {"elapsed_ms", elapsed_ms}};
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, int>> selected_cases(const std::string& group, std::optional<int> m) {
  std::vector<std::string> keys;
  if (group == "all") {
    keys = case_keys();
  } else if (std::find(case_keys().begin(), case_keys().end(), group) != case_keys().end()) {
    keys = {group};
  } else {
    throw CatalogError("unknown group '" + group + "'");
  }
  std::vector<std::pair<std::string, int>> out;
  for (const auto& k : keys) {
    if (!needs_m(k)) {
      out.emplace_back(k, 0);
    } else if (m && group != "all") {
      out.emplace_back(k, *m);
    } else {
      for (int v = 3; v <= 6; ++v) out.emplace_back(k, v);
    }
  }
  return out;
}

std::string label_id(const std::string& label) {
  std::string s;
  for (char ch : label) {
    if (ch == '\'') s += 'p';
    else if (ch != '_') s += ch;
  }
  return s;
}

namespace {

using Outcome = std::pair<bool, std::string>;

class Checker {
 public:
  explicit Checker(Report& r) : r_(r) {}
  void run(const std::string& id, const std::string& anchor, const std::function<Outcome()>& fn) {
    CheckRecord rec{id, anchor, false, ""};
    try {
      auto [ok, detail] = fn();
      rec.pass = ok;
      rec.detail = detail;
    } catch (const std::exception& e) {
      rec.detail = std::string("error: ") + e.what();
    }
    r_.checks.push_back(std::move(rec));
  }

 private:
  Report& r_;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

bool same_elements(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  if (a.order() != b.order()) return false;
  return std::all_of(a.elements().begin(), a.elements().end(), [&](const Mat2& g) { return b.contains(g); });
}

std::string point_text(const CurvePoint& p) {
  std::vector<std::string> g;
  for (const auto& q : p.gens) g.push_back(q.to_string());
  return "(" + join(g, ", ") + ")";
}

std::string projective_text(const std::pair<CycNum, CycNum>& p) {
  return "[" + p.first.to_string() + ":" + p.second.to_string() + "]";
}

}  // namespace

void verify_case(const std::string& key, int m, std::uint64_t seed, Report& out) {
  Checker ck(out);
  std::unique_ptr<HilbEngine> eng;
  const std::string cid = m > 0 ? key + "_m" + std::to_string(m) : key;
  ck.run("catalog." + cid, "group catalog", [&]() -> Outcome {
    eng = std::make_unique<HilbEngine>(get_case(key, m), seed);
    const auto& c = eng->group_case();
    const auto sl = det_one_subgroup(eng->G());
    std::vector<std::string> bad;
    for (const auto& h : c.h_matrices()) {
      if (!h.det().is_one()) bad.push_back("H generator with determinant " + h.det().to_string());
    }
    if (!same_elements(sl, eng->H())) bad.push_back("H differs from G ∩ SL2");
    if (!eng->G().contains(c.alpha_matrix()) || eng->H().contains(c.alpha_matrix())) bad.push_back("alpha is not in G \\ H");
    if (c.conductor % eng->G().exponent() != 0) bad.push_back("conductor not divisible by exponent(G)");
    for (const auto& cv : c.curves) {
      if (!cv.low && !cv.high && cv.ambient.empty() && cv.role != CurveRole::Center) bad.push_back(cv.label + " has no module data");
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, c.name + ", H = G ∩ SL2, conductor " + std::to_string(c.conductor)};
  });
  if (!eng) return;
  const HilbEngine& e = *eng;
  const GroupCase& c = e.group_case();

  ck.run("order." + cid, "group orders", [&]() -> Outcome {
    const long g = static_cast<long>(e.G().order()), h = static_cast<long>(e.H().order());
    bool ok = g == c.order_g && h == c.order_h && g == 2 * h;
    std::string d = "|G|=" + std::to_string(g) + " |H|=" + std::to_string(h) + " index " + std::to_string(h ? g / h : 0);
    if (c.center_order) {
      const long z = static_cast<long>(center(e.G()).size());
      ok = ok && z == *c.center_order;
      d += " |Z(G)|=" + std::to_string(z);
    }
    return {ok, d};
  });
  ck.run("relation." + cid, "invariant relation", [&]() -> Outcome {
    return {verify_relation(c), "f3^2 = q(f1, f2), q = " + c.relation.to_string() + " in u=x, v=y"};
  });
  ck.run("invariants." + cid, "invariant ring", [&]() -> Outcome {
    for (const auto& g : c.h_matrices()) {
      for (const Poly* f : {&c.f1, &c.f2, &c.f3}) {
        if (act(g, *f) != *f) return {false, "H does not fix " + f->to_string()};
      }
    }
    for (const auto& g : c.g_matrices()) {
      if (act(g, c.f1) != c.f1 || act(g, c.f2) != c.f2) return {false, "G does not fix f1, f2"};
      const Poly img = act(g, c.f3);
      if (img != c.f3 && img != -c.f3) return {false, "G does not preserve f3 up to sign"};
    }
    return {true, "f1, f2, f3 are H-invariant; f1, f2 are G-invariant"};
  });
  ck.run("branch_components." + cid, "branch divisor", [&]() -> Outcome {
    const long r = verify_branch_factorization(c);
    return {r == c.r, "branch_components: " + std::to_string(r)};
  });
  ck.run("alpha_invariants." + cid, "alpha on invariants", [&]() -> Outcome {
    const Mat2& a = c.alpha_matrix();
    const bool ok = act(a, c.f1) == c.f1 && act(a, c.f2) == c.f2 && act(a, c.f3) == -c.f3;
    return {ok, "alpha fixes f1, f2 and sends f3 to -f3"};
  });
  ck.run("characters." + cid, "character tables", [&]() -> Outcome {
    const auto& gt = e.g_table();
    const auto& ht = e.h_table();
    long sq = 0;
    for (int d : gt.degrees) sq += static_cast<long>(d) * d;
    const bool ok = static_cast<long>(gt.size()) == c.irreps && gt.size() == gt.classes.size() &&
                    sq == static_cast<long>(e.G().order()) && rows_orthonormal(gt) && columns_orthogonal(gt) &&
                    ht.size() == ht.classes.size() && rows_orthonormal(ht) && columns_orthogonal(ht);
    return {ok, std::to_string(gt.classes.size()) + " classes, " + std::to_string(gt.size()) + " irreducibles of G (" + std::to_string(ht.size()) +
                    " of H), sum of squared degrees " + std::to_string(sq)};
  });
  ck.run("induction." + cid, "induction from H", [&]() -> Outcome {
    const auto rep = verify_induction_pattern(e.g_table(), e.h_table());
    return {rep.ok, rep.ok ? "self-dual H-irreps split, the others induce irreducibly" : join(rep.lines, "; ")};
  });
  ck.run("quiver_h." + cid, "McKay quiver of H", [&]() -> Outcome {
    const auto& q = e.h_quiver();
    const auto type = affine_ade_type(q);
    const bool ok = type && *type == c.quiver_h && null_vector_identity(q);
    return {ok, "affine " + (type ? *type : std::string("?")) + ", " + std::to_string(q.size()) + " vertices"};
  });
  ck.run("quiver_g." + cid, "McKay quiver of G", [&]() -> Outcome {
    const auto q = mckay_quiver(e.g_table());
    const bool ok = static_cast<long>(q.size()) == c.irreps && null_vector_identity(q);
    return {ok, std::to_string(q.size()) + " vertices, null-vector identity " + (null_vector_identity(q) ? "holds" : "fails")};
  });

  const long reflection_count = [&] {
    try {
      return static_cast<long>(reflection_classes(e.G(), e.g_table().classes));
    } catch (const std::exception&) {
      return -1L;
    }
  }();

  if (c.count_only) {
    ck.run("theorem_a." + cid, "Theorem A", [&]() -> Outcome {
      const auto counts = gmm2_counts(e.h_table(), verify_branch_factorization(c));
      const long classes = static_cast<long>(e.g_table().classes.size());
      const bool ok = theorem_a_check(counts, classes) && counts.n == c.n;
      return {ok, theorem_a_text(counts, classes) + "; counts verified, fixed-locus geometry out of scope"};
    });
    ck.run("corollary_b." + cid, "Corollary B", [&]() -> Outcome {
      return {corollary_b_check(reflection_count, c.r),
              "corollary_b: " + std::to_string(reflection_count) + " reflection classes, r = " + std::to_string(c.r)};
    });
    return;
  }

  std::vector<std::pair<std::string, CurveActionResult>> results;
  for (const auto& cv : c.curves) {
    ck.run("curve." + cid + "." + label_id(cv.label), "fixed locus", [&]() -> Outcome {
      const auto r = e.classify(cv.label);
      results.emplace_back(cv.label, r);
      std::string d = r.text();
      std::vector<std::string> w;
      for (const auto& p : r.fixed) w.push_back(point_text(p));
      if (!w.empty()) d += "; fixed " + join(w, ", ");
      if (!r.isolated.empty()) d += "; isolated " + std::to_string(r.isolated.size());
      const bool ok = matches_expectation(r, cv.expect);
      if (!ok) d += "; expected " + expected_action_text(cv.expect);
      return {ok, d};
    });
  }
  ck.run("identities." + cid, "structural identities", [&]() -> Outcome {
    const auto failed = e.failed_identities();
    std::size_t total = c.identities.size();
    for (const auto& cv : c.curves) total += cv.identities.size();
    if (!failed.empty()) return {false, "failing: " + join(failed, "; ")};
    return {true, std::to_string(total) + " identities hold"};
  });
  for (const auto& cv : c.curves) {
    if (!cv.param) continue;
    ck.run("mobius." + cid + "." + label_id(cv.label), "Mobius map", [&]() -> Outcome {
      const auto mob = e.mobius(cv.label);
      std::string d = mob->text();
      std::vector<std::string> fp;
      for (const auto& p : mob->fixed_points) fp.push_back(projective_text(p));
      d += mob->scalar ? ", identity on the curve" : ", fixed " + join(fp, ", ");
      const bool want_scalar = cv.expect.kind == ExpectedAction::Kind::PointwiseFixed;
      return {mob->scalar == want_scalar && (mob->scalar || mob->fixed_points.size() == 2), d};
    });
  }
  ck.run("alpha_squared." + cid, "A = Z/2", [&]() -> Outcome {
    return {e.alpha_squared_identity_on_ambients(), "alpha^2 preserves every ambient module"};
  });
  ck.run("exchange_symmetry." + cid, "fixed locus", [&]() -> Outcome {
    for (const auto& [label, r] : results) {
      if (r.kind != CurveActionResult::Kind::ExchangedWith) continue;
      const auto back = e.classify(r.partner);
      if (back.kind != CurveActionResult::Kind::ExchangedWith || back.partner != label) {
        return {false, label + " -> " + r.partner + " is not mutual"};
      }
    }
    return {results.size() == c.curves.size(), "exchanges are mutual"};
  });
  ck.run("contragredient." + cid, "contragredient duality", [&]() -> Outcome {
    const auto& ht = e.h_table();
    std::vector<std::string> bad;
    for (const auto& [label, r] : results) {
      const int irr = e.curve(label).irrep;
      const bool exchanged = r.kind == CurveActionResult::Kind::ExchangedWith;
      if (exchanged == is_real_valued(ht.chars[irr])) bad.push_back(label);
    }
    return {bad.empty() && results.size() == c.curves.size(),
            bad.empty() ? "exchanged exactly on the non-real H-characters" : "mismatch on " + join(bad, ", ")};
  });
  for (std::size_t f = 0; f < c.families.size(); ++f) {
    ck.run("family." + cid + "." + std::to_string(f + 1), "family limits", [&]() -> Outcome {
      const auto fc = e.check_family(c.families[f]);
      const long hits = std::count(fc.contains.begin(), fc.contains.end(), true);
      return {fc.ok(), c.families[f].direction + ": " + std::to_string(hits) + "/" + std::to_string(fc.contains.size()) +
                           " generators in the limit, orbit " + std::to_string(fc.orbit_size)};
    });
  }
  ck.run("isolated." + cid, "isolated fixed points", [&]() -> Outcome {
    const auto res = e.isolated_point_resolution();
    std::vector<std::string> parts;
    for (const auto& mt : res.matches) {
      parts.push_back("E(" + mt.curve + ") " + mt.point + " <- " +
                      (mt.family >= 0 ? c.families[mt.family].direction : std::string("unmatched")));
    }
    for (const auto& p : res.problems) parts.push_back(p);
    return {res.ok(), join(parts, "; ")};
  });
  ck.run("theorem_a." + cid, "Theorem A", [&]() -> Outcome {
    const auto counts = sod_counts(verify_branch_factorization(c), results);
    const long classes = static_cast<long>(e.g_table().classes.size());
    if (results.size() != c.curves.size()) return {false, "some curves were not classified"};
    const bool ok = theorem_a_check(counts, classes) && counts.n == c.n &&
                    counts.C == static_cast<long>(e.h_table().size()) - 1;
    return {ok, theorem_a_text(counts, classes) + " (P=" + std::to_string(counts.P) + " C=" + std::to_string(counts.C) +
                    " X=" + std::to_string(counts.X) + ")"};
  });
  ck.run("corollary_b." + cid, "Corollary B", [&]() -> Outcome {
    return {corollary_b_check(reflection_count, c.r),
            "corollary_b: " + std::to_string(reflection_count) + " reflection classes, r = " + std::to_string(c.r)};
  });
}

Report run_verify(const std::string& group, std::optional<int> m, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.group = group;
  if (m && group != "all" && needs_m(group)) r.group += "_m" + std::to_string(*m);
  for (const auto& [key, mm] : selected_cases(group, m)) verify_case(key, mm, seed, r);
  r.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

std::string fixed_locus_text(const HilbEngine& e, bool& ok) {
  const auto& c = e.group_case();
  std::ostringstream os;
  os << c.name << "\n";
  if (c.count_only) {
    os << "counts verified, fixed-locus geometry out of scope\n";
    return os.str();
  }
  for (const auto& cv : c.curves) {
    CurveActionResult r;
    try {
      r = e.classify(cv.label);
    } catch (const std::exception& ex) {
      ok = false;
      os << "E(" << cv.label << "): error: " << ex.what() << "\n";
      continue;
    }
    if (!matches_expectation(r, cv.expect)) ok = false;
    os << "E(" << cv.label << "): " << r.text() << "\n";
    if (r.mobius) os << "  mobius " << r.mobius->text() << "\n";
    for (const auto& p : r.fixed) {
      os << "  fixed " << p.tag << " " << point_text(p);
      if (!p.meets.empty()) {
        std::vector<std::string> m;
        for (const auto& l : p.meets) m.push_back("E(" + l + ")");
        os << " meets " << join(m, ", ");
      } else if (r.kind == CurveActionResult::Kind::Involution) {
        os << " isolated in the exceptional locus";
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string case_json(const GroupCase& c) {
  using nlohmann::ordered_json;
  auto polys = [](const std::vector<Poly>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
  };
  ordered_json j;
  j["key"] = c.key;
  j["name"] = c.name;
  if (c.m > 0) j["m"] = c.m;
  j["conductor"] = c.conductor;
  j["coxeter"] = c.coxeter;
  j["count_only"] = c.count_only;
  ordered_json mats = ordered_json::object();
  for (const auto& [name, mat] : c.matrices) mats[name] = mat.to_string();
  j["matrices"] = mats;
  j["G"] = c.g_gens;
  j["H"] = c.h_gens;
  j["alpha"] = c.alpha;
  j["invariants"] = polys({c.f1, c.f2, c.f3});
  j["relation"] = c.relation.to_string();
  j["unit"] = c.unit.to_string();
  j["factors"] = polys(c.factors);
  ordered_json fams = ordered_json::array();
  for (const auto& f : c.families) fams.push_back({{"direction", f.direction}, {"generators", polys(f.gens)}});
  j["families"] = fams;
  ordered_json iso = ordered_json::array();
  for (const auto& i : c.isolated) iso.push_back({{"curve", i.curve}, {"generators", polys(i.gens)}});
  j["isolated"] = iso;
  ordered_json curves = ordered_json::array();
  for (const auto& cv : c.curves) {
    ordered_json o;
    o["label"] = cv.label;
    o["role"] = curve_role_name(cv.role);
    o["rep_dim"] = cv.rep_dim;
    if (cv.low) o["low"] = polys(cv.low->gens);
    if (cv.high) o["high"] = polys(cv.high->gens);
    if (!cv.ambient.empty()) o["ambient"] = polys(cv.ambient);
    if (!cv.meet_low.empty()) o["meet_low"] = cv.meet_low;
    if (!cv.meet_high.empty()) o["meet_high"] = cv.meet_high;
    if (cv.probe) o["probe"] = polys(cv.probe->gens);
    for (const auto& p : cv.points) o["points"].push_back(polys(p.gens));
    if (cv.param) o["param"] = {{"a", polys(cv.param->u)}, {"b", polys(cv.param->v)}};
    o["identities"] = cv.identities.size();
    o["expect"] = expected_action_text(cv.expect);
    curves.push_back(o);
  }
  j["curves"] = curves;
  j["expected"] = {{"order_G", c.order_g}, {"order_H", c.order_h}, {"irreps", c.irreps},
                   {"r", c.r},             {"n", c.n},             {"quiver_H", c.quiver_h}};
  if (c.center_order) j["expected"]["center_order"] = *c.center_order;
  return j.dump(2) + "\n";
}

}  // namespace mckay
