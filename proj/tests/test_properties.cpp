#include <doctest.h>

#include <random>

#include "mckay/hilb.hpp"

using namespace mckay;

namespace {

std::vector<GroupCase> geometric_cases() {
  std::vector<GroupCase> out{get_case("g12"), get_case("g13"), get_case("g22")};
  for (int m = 3; m <= 6; ++m) out.push_back(get_case("g2mm2", m));
  return out;
}

Poly random_poly(const CycField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 5), coef(-4, 4), root(0, f.conductor() - 1), terms(1, 4);
  Poly p;
  for (int k = terms(rng); k > 0; --k) {
    const int d = deg(rng);
    std::uniform_int_distribution<int> ex(0, d);
    const int a = ex(rng);
    p.add_term(Monomial{a, d - a, 0}, root_of_unity(f, root(rng)) * coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("field axioms") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  const auto& f = CycField::get(60);
  auto sample = [&] {
    std::vector<mpq_class> c;
    for (int k = 0; k < f.degree(); ++k) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    return CycNum(f, c);
  };
  for (int s = 0; s < 1000; ++s) {
    const CycNum a = sample(), b = sample(), c = sample();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
  }
}

// act(g, f) = f(g v) composes as act(g, act(h, f)) = act(h g, f).
TEST_CASE("substitution action composes") {
  std::mt19937_64 rng(5);
  for (const auto& c : geometric_cases()) {
    CAPTURE(c.name);
    const auto g = FiniteMatrixGroup::closure(c.g_matrices(), c.name);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    for (int s = 0; s < 200; ++s) {
      const Mat2& a = g.element(pick(rng));
      const Mat2& b = g.element(pick(rng));
      const Poly f = random_poly(*c.field, rng), h = random_poly(*c.field, rng);
      REQUIRE(act(a, act(b, f)) == act(b * a, f));
      REQUIRE(act(a, f * h) == act(a, f) * act(a, h));
      REQUIRE(act(Mat2::identity(), f) == f);
    }
  }
}

TEST_CASE("alpha squared on ambient modules") {
  for (const auto& c : geometric_cases()) {
    CAPTURE(c.name);
    const HilbEngine e(c);
    CHECK(e.alpha_squared_identity_on_ambients());
    for (const auto& cd : e.curves()) CHECK(e.alpha_image(e.alpha_image(cd.ambient)) == cd.ambient);
  }
}

TEST_CASE("classification, exchange symmetry and contragredients") {
  for (const auto& c : geometric_cases()) {
    CAPTURE(c.name);
    const HilbEngine e(c);
    for (const auto& cd : e.curves()) {
      CAPTURE(cd.spec->label);
      CHECK(cd.problems.empty());
      const auto r = e.classify(cd.spec->label);
      CHECK(matches_expectation(r, cd.spec->expect));
      const bool exchanged = r.kind == CurveActionResult::Kind::ExchangedWith;
      CHECK(exchanged != is_real_valued(e.h_table().chars[cd.irrep]));
      if (exchanged) {
        const auto back = e.classify(r.partner);
        CHECK(back.kind == CurveActionResult::Kind::ExchangedWith);
        CHECK(back.partner == cd.spec->label);
      }
      if (r.kind == CurveActionResult::Kind::PointwiseFixed) {
        CHECK((r.fixed.size() >= 3 || (r.mobius && r.mobius->scalar)));
      }
    }
  }
}

TEST_CASE("limit ideals contain no linear forms") {
  for (const auto& c : geometric_cases()) {
    CAPTURE(c.name);
    const HilbEngine e(c);
    for (const auto& fam : c.families) {
      const auto orbit = e.orbit(fam);
      CHECK_FALSE(family_limit_contains(orbit, Poly::x()));
      CHECK_FALSE(family_limit_contains(orbit, Poly::y()));
      CHECK_FALSE(family_limit_contains(orbit, Poly::x() + CycNum(3) * Poly::y()));
    }
  }
}
