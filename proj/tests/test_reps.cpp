#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mckay/catalog.hpp"
#include "mckay/reps.hpp"

using namespace mckay;

namespace {

struct Tables {
  FiniteMatrixGroup g, h;
  CharacterTable gt, ht;
  explicit Tables(const GroupCase& c)
      : g(FiniteMatrixGroup::closure(c.g_matrices(), c.name)),
        h(det_one_subgroup(g)),
        gt(character_table(g, *c.field)),
        ht(character_table(h, *c.field)) {}
};

CycNum value_at(const CharacterTable& t, const ClassFunction& f, int elem) {
  return f.values[t.classes.class_of[elem]];
}

// Induced character from the Frobenius formula over elements of G.
std::vector<CycNum> induce_by_elements(const Tables& t, const ClassFunction& chi) {
  std::vector<CycNum> out;
  const CycNum inv_h = CycNum::rational(1, static_cast<long>(t.h.order()));
  for (std::size_t gi = 0; gi < t.g.order(); ++gi) {
    CycNum s = CycNum::zero(t.gt.field);
    for (std::size_t xi = 0; xi < t.g.order(); ++xi) {
      const Mat2& x = t.g.element(static_cast<int>(xi));
      const Mat2 conj = x * t.g.element(static_cast<int>(gi)) * x.inverse();
      const int k = t.h.index_of(conj);
      if (k >= 0) s += value_at(t.ht, chi, k);
    }
    out.push_back(s * inv_h);
  }
  return out;
}

CycNum element_norm(const std::vector<CycNum>& v) {
  CycNum s = CycNum::zero(v[0].field());
  for (const auto& a : v) s += a * a.conj();
  return s / CycNum(static_cast<long>(v.size()));
}

std::vector<int> graph_degrees(const Quiver& q) {
  std::vector<int> d;
  for (std::size_t i = 0; i < q.size(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < q.size(); ++j) s += static_cast<int>(q.adjacency[i][j]);
    d.push_back(s);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("tiny character tables") {
  const auto triv = FiniteMatrixGroup::closure({}, "1");
  const auto t1 = character_table(triv, CycField::get(1));
  REQUIRE(t1.size() == 1);
  CHECK(t1.chars[0].values == std::vector<CycNum>{CycNum(1)});

  const Mat2 minus{CycNum(-1), CycNum(0), CycNum(0), CycNum(-1)};
  const auto pm = FiniteMatrixGroup::closure({minus}, "pm");
  const auto t2 = character_table(pm, CycField::get(2));
  REQUIRE(t2.size() == 2);
  CHECK(t2.chars[0].values == std::vector<CycNum>{CycNum(1), CycNum(1)});
  CHECK(t2.chars[1].values == std::vector<CycNum>{CycNum(1), CycNum(-1)});
  const auto q = mckay_quiver(t2);
  // <chi_nat * triv, sign> = (2*1 + (-2)*(-1)) / 2
  const CycNum oracle = (CycNum(2) * 1 * 1 + CycNum(-2) * 1 * CycNum(-1)) / CycNum(2);
  CHECK(q.adjacency[0][1] == oracle.rational_value().get_num().get_si());
  CHECK(q.adjacency[1][0] == 2);
  CHECK(q.adjacency[0][0] == 0);
  CHECK(q.adjacency[1][1] == 0);
}

TEST_CASE("binary tetrahedral group") {
  const Tables t(get_case("g12"));
  auto degrees = t.ht.degrees;
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  const auto q = mckay_quiver(t.ht);
  CHECK(q.size() == 7);
  CHECK(is_symmetric(q));
  CHECK(graph_degrees(q) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  CHECK(affine_ade_type(q) == std::optional<std::string>("E6"));
  CHECK(t.gt.size() == 8);
}

TEST_CASE("sign character of the index-2 subgroup") {
  const Tables t(get_case("g12"));
  const int e = epsilon_character(t.gt, t.h);
  REQUIRE(e >= 0);
  const auto sq = product(t.gt.chars[e], t.gt.chars[e]);
  CHECK(sq.values == t.gt.chars[0].values);
}

TEST_CASE("induction from H") {
  const Tables t(get_case("g12"));
  const auto ind_triv = induce(t.gt, t.ht, t.ht.chars[0]);
  const auto parts = decompose(t.gt, ind_triv);
  const int e = epsilon_character(t.gt, t.h);
  CHECK(parts[0] == 1);
  CHECK(parts[e] == 1);
  CHECK(std::accumulate(parts.begin(), parts.end(), 0L) == 2);

  const auto three = std::find(t.ht.degrees.begin(), t.ht.degrees.end(), 3) - t.ht.degrees.begin();
  const auto ind3 = decompose(t.gt, induce(t.gt, t.ht, t.ht.chars[three]));
  CHECK(std::accumulate(ind3.begin(), ind3.end(), 0L) == 2);
  CHECK(verify_induction_pattern(t.gt, t.ht).ok);

  for (int m : {3, 5}) {
    const Tables d(get_case("g2mm2", m));
    for (std::size_t i = 0; i < d.ht.size(); ++i) {
      if (d.ht.degrees[i] != 1 || is_real_valued(d.ht.chars[i])) continue;
      const auto v = induce_by_elements(d, d.ht.chars[i]);
      CHECK(element_norm(v) == CycNum(1));
      CHECK(inner_product(d.gt, induce(d.gt, d.ht, d.ht.chars[i]), induce(d.gt, d.ht, d.ht.chars[i])) == CycNum(1));
    }
    CHECK(verify_induction_pattern(d.gt, d.ht).ok);
  }
}

TEST_CASE("quivers of every case") {
  std::vector<GroupCase> cases{get_case("g12"), get_case("g13"), get_case("g22")};
  for (int m = 3; m <= 6; ++m) cases.push_back(get_case("g2mm2", m));
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const Tables t(c);
    CHECK(static_cast<long>(t.gt.size()) == c.irreps);
    CHECK(t.gt.size() == t.gt.classes.size());
    CHECK(rows_orthonormal(t.gt));
    CHECK(columns_orthogonal(t.gt));
    CHECK(rows_orthonormal(t.ht));
    CHECK(columns_orthogonal(t.ht));
    long sq = 0;
    for (int d : t.gt.degrees) sq += static_cast<long>(d) * d;
    CHECK(sq == static_cast<long>(t.g.order()));
    const auto qh = mckay_quiver(t.ht);
    const auto qg = mckay_quiver(t.gt);
    CHECK(is_symmetric(qh));
    CHECK(null_vector_identity(qh));
    CHECK(null_vector_identity(qg));
    CHECK(affine_ade_type(qh) == std::optional<std::string>(c.quiver_h));
    if (c.key == "g2mm2") {
      CHECK(qh.size() == static_cast<std::size_t>(c.m + 3));
      CHECK(c.quiver_h == "D" + std::to_string(c.m + 2));
      CHECK(qg.size() == static_cast<std::size_t>(c.m % 2 == 0 ? 2 * c.m + 6 : 2 * c.m + 3));
    }
  }
}

TEST_CASE("quiver output formats") {
  const Tables t(get_case("g12"));
  const auto q = mckay_quiver(t.ht);
  const std::string dot = quiver_dot(q, "H");
  CHECK(dot.rfind("graph \"H\" {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 7);
  const std::string json = quiver_json(q, "H");
  CHECK(json.find("\"adjacency\"") != std::string::npos);
  CHECK(same_tree(affine_template("E6"), affine_template("E6")));
  CHECK_FALSE(same_tree(affine_template("E6"), affine_template("D5")));
}
