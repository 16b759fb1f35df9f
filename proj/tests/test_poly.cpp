#include <doctest.h>

#include "mckay/catalog.hpp"
#include "mckay/linalg.hpp"
#include "mckay/parse.hpp"

using namespace mckay;

namespace {

ParseEnv g12_env() {
  const auto& f = CycField::get(24);
  ParseEnv env{&f, {}, {}};
  env.symbols["w"] = parse_poly("z^8", env);
  env.symbols["phi"] = parse_poly("(x^2 + y^2)^2 + 4*w*x^2*y^2", env);
  env.symbols["psi"] = parse_poly("(x^2 + y^2)^2 + 4*w^2*x^2*y^2", env);
  return env;
}

}  // namespace

TEST_CASE("canonical text form round-trips") {
  const Poly f = parse_poly("x^5*y - x*y^5");
  CHECK(f.to_string() == "x^5*y - x*y^5");
  CHECK(parse_poly(f.to_string()) == f);
  CHECK(parse_poly("(x + y)^2").to_string() == "x^2 + 2*x*y + y^2");
  CHECK(parse_poly("x*y/2 - 3").to_string() == "1/2*x*y - 3");
  CHECK(parse_poly("0").is_zero());
  const auto env = g12_env();
  const Poly phi = env.symbols.at("phi");
  CHECK(parse_poly(phi.to_string(), env) == phi);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
  CHECK_THROWS_AS(parse_poly("foo"), ParseError);
}

TEST_CASE("integer expressions and brace expansion") {
  CHECK(parse_int("2*m + 6", {{"m", 4}}) == 14);
  CHECK(parse_int("lcm(2*m, 4)", {{"m", 3}}) == 12);
  CHECK(expand_braces("rho_{m+1}'", {{"m", 5}}) == "rho_6'");
  CHECK(split_top_level("a, (b, c), [d, e]", ',') == std::vector<std::string>{"a", "(b, c)", "[d, e]"});
}

TEST_CASE("ring operations") {
  const Poly x = Poly::x(), y = Poly::y();
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y).pow(3).size() == 4);
  CHECK((x * y - y * x).is_zero());
  CHECK(parse_poly("x^3*y + x*t^2").degree() == 4);
  CHECK(parse_poly("x^3*y + x*t^2").xy_degree() == 4);
  CHECK(parse_poly("x^2 + y").is_homogeneous() == false);
}

TEST_CASE("linear substitution") {
  const auto env = g12_env();
  const Poly x = Poly::x(), y = Poly::y();
  const Mat2 flip{CycNum(-1), CycNum(0), CycNum(0), CycNum(1)};
  CHECK(act(flip, x * y) == -(x * y));
  CHECK(act(flip, x) == -x);
  const auto& f = *env.field;
  const CycNum e = root_of_unity(f, 3);
  const Mat2 alpha{e, CycNum(0), CycNum(0), e.pow(3)};
  CHECK(act(alpha, env.symbols.at("phi")) == -env.symbols.at("psi"));
  const Mat2 tau{CycNum(0), CycNum(1), CycNum(-1), CycNum(0)};
  CHECK(act(tau, x * x + y * y) == x * x + y * y);
  CHECK(act(Mat2::identity(), env.symbols.at("phi")) == env.symbols.at("phi"));
  CHECK(act(alpha, Poly::t()) == Poly::t());
}

TEST_CASE("evaluation") {
  const Poly x = Poly::x(), y = Poly::y();
  CHECK(evaluate(x * x * y * y, 1, 1) == CycNum(1));
  for (int m = 3; m <= 6; ++m) {
    const GroupCase c = get_case("g2mm2", m);
    CHECK(evaluate(c.f3, 1, 1).is_zero());
  }
  const GroupCase g12 = get_case("g12");
  const auto& f = *g12.field;
  CHECK(evaluate(g12.f2, 1, root_of_unity(f, 3)) == CycNum(-12));
  CHECK(evaluate(parse_poly("x + t"), 2, 0, 5) == CycNum(7));
}

TEST_CASE("homogeneous parts") {
  const Poly x = Poly::x(), y = Poly::y();
  CHECK(homogeneous_part(x * y + x.pow(4), 2) == x * y);
  CHECK(homogeneous_part(Poly(), 5).is_zero());
  const Poly T = parse_poly("x^5*y - x*y^5");
  const Poly chi = parse_poly("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
  CHECK(homogeneous_part(T + chi, 6) == T);
  CHECK(homogeneous_part(T + chi, 12) == chi);
}

TEST_CASE("dense conversion") {
  const auto mons = monomials_of_degree(3);
  CHECK(mons.size() == 4);
  const Poly f = parse_poly("x^3 - 2*x*y^2");
  const auto v = to_dense(f, mons);
  CHECK(v[0] == CycNum(1));
  CHECK(v[2] == CycNum(-2));
  CHECK_THROWS(to_dense(parse_poly("x^2"), mons));
  CHECK(compose(f, Poly::y(), Poly::x()) == parse_poly("y^3 - 2*x^2*y"));
}

TEST_CASE("exact linear algebra") {
  Mat a{{CycNum(1), CycNum(2)}, {CycNum(2), CycNum(4)}};
  CHECK(rank(a) == 1);
  CHECK(nullspace(a).size() == 1);
  CHECK_FALSE(solve(a, {CycNum(1), CycNum(1)}).has_value());
  const auto s = solve(a, {CycNum(1), CycNum(2)});
  REQUIRE(s);
  CHECK((*s)[0] + 2 * (*s)[1] == CycNum(1));
  CHECK(trace(identity_matrix(5)) == CycNum(5));
}
