#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mckay/hilb.hpp"

using namespace mckay;

namespace {

ParseEnv env_for(const GroupCase& c) {
  ParseEnv env{c.field, {}, {}};
  const int n = c.field->conductor();
  auto let = [&](const std::string& name, const std::string& text) { env.symbols[name] = parse_poly(text, env); };
  if (n % 4 == 0) let("i", "z^" + std::to_string(n / 4));
  if (n % 3 == 0) let("w", "z^" + std::to_string(n / 3));
  if (c.key == "g12" || c.key == "g13") {
    let("phi", "(x^2 + y^2)^2 + 4*w*x^2*y^2");
    let("psi", "(x^2 + y^2)^2 + 4*w^2*x^2*y^2");
    let("T", "x^5*y - x*y^5");
    let("chi", "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
  }
  return env;
}

struct Fixture {
  explicit Fixture(const std::string& key, int m = 0) : eng(get_case(key, m)), env(env_for(eng.group_case())) {}
  Poly p(const std::string& text) const { return parse_poly(text, env); }
  std::vector<Poly> ps(const std::string& text) const {
    std::vector<Poly> out;
    for (const auto& part : split_top_level(text, ',')) out.push_back(p(part));
    return out;
  }
  HilbEngine eng;
  ParseEnv env;
};

long total(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

TEST_CASE("span membership") {
  const Fixture g13("g13");
  const Span tc(nullptr, {g13.p("T"), g13.p("chi")});
  CHECK(tc.contains(g13.p("T + chi")));
  CHECK(tc.dim() == 2);
  const Span xy(nullptr, {Poly::x() * Poly::y()});
  CHECK_FALSE(xy.contains(Poly::x() * Poly::x()));

  const Fixture g12("g12");
  const auto v6 = g12.ps("x^2*phi, x*y*phi, y^2*phi, x^2*psi, x*y*psi, y^2*psi");
  const Poly target = g12.p("(x^2 - y^2)*(phi + psi)");
  // expansion by hand: x^2 phi - y^2 phi + x^2 psi - y^2 psi
  CHECK(v6[0] - v6[2] + v6[3] - v6[5] == target);
  CHECK(Span(nullptr, v6).contains(target));
  CHECK(g12.eng.span(v6).contains(target));
  const Span s(nullptr, v6);
  CHECK(s.from_coords(s.coords(target)) == target);
  CHECK((Span(nullptr, {v6[0]}) + Span(nullptr, {v6[1]})).dim() == 2);
}

TEST_CASE("quotient normal forms") {
  const Fixture g12("g12");
  const auto& c = g12.eng.group_case();
  CHECK(g12.eng.quotient().reduce(c.f1).is_zero());
  CHECK(g12.eng.quotient().reduce(c.f2 * Poly::x() + c.f1 * Poly::y()).is_zero());
  CHECK_FALSE(g12.eng.quotient().reduce(Poly::x().pow(3)).is_zero());
}

TEST_CASE("H-submodules") {
  const Fixture g13("g13");
  CHECK(g13.eng.is_H_submodule(Span(nullptr, {g13.p("T + chi")})));
  const Fixture g12("g12");
  CHECK_FALSE(g12.eng.is_H_submodule(Span(nullptr, {Poly::x()})));
  const Mat2& mu = g12.eng.group_case().matrices.at("mu");
  CHECK_FALSE(act(mu, Poly::x()).coeff(Monomial{0, 1, 0}).is_zero());
  const auto& c = g12.eng.group_case();
  const Span f1(nullptr, {c.f1});
  for (const auto& g : c.g_matrices()) CHECK(f1.contains(act(g, c.f1)));
  CHECK(g12.eng.is_H_submodule(f1));
}

TEST_CASE("representation types") {
  for (int m = 3; m <= 6; ++m) {
    const Fixture d("g2mm2", m);
    const auto t = d.eng.rep_type(d.eng.span({d.p("x*y")}));
    CHECK(total(t) == 1);
    CHECK(d.eng.h_table().degrees[d.eng.irreducible_type(d.eng.span({d.p("x*y")}))] == 1);
  }
  const Fixture g12("g12");
  const auto v6 = g12.eng.span(g12.ps("x^2*phi, x*y*phi, y^2*phi, x^2*psi, x*y*psi, y^2*psi"));
  const auto t = g12.eng.rep_type(v6);
  CHECK(total(t) == 2);
  const auto it = std::find(t.begin(), t.end(), 2);
  REQUIRE(it != t.end());
  CHECK(g12.eng.h_table().degrees[it - t.begin()] == 3);
  CHECK(g12.eng.irreducible_type(v6) == -1);

  const Fixture g22("g22");
  const auto v14 = g22.eng.span(g22.eng.group_case().isolated[0].gens);
  CHECK(v14.dim() == 3);
  const int k = g22.eng.irreducible_type(v14);
  REQUIRE(k >= 0);
  CHECK(g22.eng.h_table().degrees[k] == 3);
}

TEST_CASE("alpha images") {
  const Fixture g13("g13");
  const Span tc(nullptr, {g13.p("T + chi")});
  const Span img = g13.eng.alpha_image(tc);
  CHECK(img == Span(nullptr, {g13.p("T - chi")}));
  CHECK(img != tc);
  const Span sum(nullptr, {g13.p("T"), g13.p("chi")});
  CHECK(g13.eng.alpha_image(sum) == sum);
  const Fixture g12("g12");
  CHECK(g12.eng.alpha_image(Span(nullptr, {g12.p("phi")})) == Span(nullptr, {g12.p("psi")}));
}

TEST_CASE("curve classification") {
  const Fixture g13("g13");
  CHECK(g13.eng.classify("rho_2'").kind == CurveActionResult::Kind::PointwiseFixed);
  CHECK(g13.eng.classify("rho_4").text() == "pointwise-fixed");
  const Fixture g12("g12");
  const auto r = g12.eng.classify("rho_1'");
  CHECK(r.kind == CurveActionResult::Kind::ExchangedWith);
  CHECK(r.partner == "rho_1''");
  CHECK(r.text() == "exchanged-with E(rho_1'')");
  CHECK_THROWS(g12.eng.classify("rho_7"));
  for (int m : {4, 6}) {
    const Fixture d("g2mm2", m);
    const std::string label = "rho_" + std::to_string(m + 1) + "'";
    const auto res = d.eng.classify(label);
    CHECK(res.kind == CurveActionResult::Kind::Involution);
    const Span want = d.eng.span({d.p("x^" + std::to_string(m) + " - i^" + std::to_string(m + 2) + "*y^" +
                                      std::to_string(m))});
    CHECK(std::any_of(res.fixed.begin(), res.fixed.end(), [&](const CurvePoint& p) { return p.span == want; }));
  }
}

TEST_CASE("Mobius maps") {
  const Fixture g12("g12");
  const auto mob = g12.eng.mobius("rho_3");
  REQUIRE(mob);
  const CycNum w = root_of_unity(*g12.eng.group_case().field, 8);
  CHECK(mob->m == Mat2{CycNum(0), w, CycNum(1), CycNum(0)});
  CHECK_FALSE(mob->scalar);
  REQUIRE(mob->fixed_points.size() == 2);
  const std::set<std::string> fixed{mob->fixed_points[0].second.to_string(), mob->fixed_points[1].second.to_string()};
  CHECK(fixed == std::set<std::string>{w.to_string(), (-w).to_string()});
  CHECK(mob->fixed_points[0].first.is_one());
  const auto id = g12.eng.mobius("rho_2");
  REQUIRE(id);
  CHECK(id->scalar);
  CHECK(id->m.b.is_zero());
  CHECK(id->m.c.is_zero());
  CHECK(id->m.a == id->m.d);
  CHECK_FALSE(g12.eng.mobius("rho_1'").has_value());
}

TEST_CASE("orbits") {
  const Fixture d3("g2mm2", 3);
  const auto o = orbit_scalars(d3.eng.H(), 1, 1);
  CHECK(o.size() == 12);
  std::set<std::string> distinct;
  for (const auto& [a, b] : o) distinct.insert(a.to_string() + ":" + b.to_string());
  CHECK(distinct.size() == 12);

  const Fixture g13("g13");
  // points over the six octahedron vertices; only a third of them have a zero coordinate
  const auto o2 = orbit_scalars(g13.eng.H(), 1, 0);
  CHECK(o2.size() == 48);
  CHECK(std::count_if(o2.begin(), o2.end(), [](const auto& q) { return q.first.is_zero() || q.second.is_zero(); }) == 16);
  for (const auto& [a, b] : o2) CHECK(evaluate(g13.p("T"), a, b).is_zero());
  const auto triv = FiniteMatrixGroup::closure({}, "1");
  CHECK(orbit_scalars(triv, 2, 3).size() == 1);
}

TEST_CASE("family limits") {
  const Fixture d3("g2mm2", 3);
  const auto o = orbit_scalars(d3.eng.H(), 1, 1);
  CHECK(family_limit_contains(o, d3.p("x^4")));
  CHECK(family_limit_contains(o, d3.p("y^4")));
  CHECK(family_limit_contains(o, d3.eng.group_case().f3));
  CHECK_FALSE(family_limit_contains(o, d3.p("x")));
  CHECK_FALSE(family_limit_contains(o, d3.p("x^3")));

  const Fixture g22("g22");
  const auto& fam = g22.eng.group_case().families[0];
  const auto o22 = g22.eng.orbit(fam);
  CHECK(o22.size() == 120);
  for (const auto& g : fam.gens) CHECK(family_limit_contains(o22, g));
  CHECK(family_limit_contains(o22, fam.gens) == std::vector<bool>{true, true, true});
  const auto fc = g22.eng.check_family(fam);
  CHECK(fc.ok());
  CHECK(fc.orbit_size == 120);
}

TEST_CASE("isolated points are resolved") {
  for (const auto& key : {"g12", "g13", "g22"}) {
    const Fixture f(key);
    const auto res = f.eng.isolated_point_resolution();
    CHECK_MESSAGE(res.ok(), key);
    CHECK(res.problems.empty());
    for (const auto& mt : res.matches) CHECK(mt.family >= 0);
  }
  for (int m = 3; m <= 6; ++m) {
    const Fixture d("g2mm2", m);
    CHECK(d.eng.isolated_point_resolution().ok());
  }
}

// The printed G13 V10(rho_3) list has 40*x^10 where the submodule needs 4*x^10.
TEST_CASE("printed G13 V10 generator") {
  const Fixture g13("g13");
  const auto printed = g13.ps("40*x^10 + 60*x^6*y^4, 5*x^9*y + 54*x^5*y^5 + 5*x*y^9, 60*x^4*y^6 + 4*y^10");
  CHECK_FALSE(g13.eng.is_H_submodule(g13.eng.span(printed)));
  const auto fixed = g13.ps("4*x^10 + 60*x^6*y^4, 5*x^9*y + 54*x^5*y^5 + 5*x*y^9, 60*x^4*y^6 + 4*y^10");
  CHECK(g13.eng.is_H_submodule(g13.eng.span(fixed)));
}

TEST_CASE("curve data of the catalog") {
  for (const auto& key : {"g12", "g13", "g22"}) {
    const Fixture f(key);
    for (const auto& cd : f.eng.curves()) {
      CAPTURE(cd.spec->label);
      CHECK(cd.problems.empty());
      CHECK(cd.irrep > 0);
      CHECK(cd.distance >= 0);
    }
  }
}
