#include <doctest.h>

#include <set>

#include "mckay/sod.hpp"

using namespace mckay;

namespace {

using Results = std::vector<std::pair<std::string, CurveActionResult>>;

Results classify_all(const HilbEngine& e) {
  Results out;
  for (const auto& cv : e.group_case().curves) out.emplace_back(cv.label, e.classify(cv.label));
  return out;
}

long class_count(const HilbEngine& e) { return static_cast<long>(e.g_table().classes.size()); }

CurveActionResult of_kind(CurveActionResult::Kind k, const std::string& partner = "") {
  CurveActionResult r;
  r.kind = k;
  r.partner = partner;
  return r;
}

// Conjugacy classes by brute force: orbits of g -> x g x^-1 over all x.
std::size_t brute_class_count(const FiniteMatrixGroup& g) {
  std::set<int> seen;
  std::size_t classes = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen.count(static_cast<int>(i))) continue;
    ++classes;
    for (const auto& x : g.elements()) seen.insert(g.index_of(x * g.element(static_cast<int>(i)) * x.inverse()));
  }
  return classes;
}

}  // namespace

TEST_CASE("counts for the exceptional groups") {
  const HilbEngine g12(get_case("g12"));
  const auto c12 = sod_counts(1, classify_all(g12));
  CHECK(c12.P == 1);
  CHECK(c12.C == 6);
  CHECK(c12.X == 2);
  CHECK(c12.n == 6);
  CHECK(c12.total() == 8);
  CHECK(theorem_a_check(c12, class_count(g12)));
  CHECK(theorem_a_text(c12, class_count(g12)) == "theorem_a: 6+1+1=8");

  const HilbEngine g22(get_case("g22"));
  const auto c22 = sod_counts(1, classify_all(g22));
  CHECK(c22.P == 4);
  CHECK(c22.C == 8);
  CHECK(c22.X == 0);
  CHECK(c22.n == 16);
  CHECK(c22.total() == 18);

  const HilbEngine g13(get_case("g13"));
  const auto c13 = sod_counts(2, classify_all(g13));
  CHECK(c13.n == 13);
  CHECK(theorem_a_text(c13, class_count(g13)) == "theorem_a: 13+2+1=16");
}

TEST_CASE("counts for G(10,5,2)") {
  const HilbEngine d5(get_case("g2mm2", 5));
  const auto c = sod_counts(2, classify_all(d5));
  CHECK(c.P == 2);
  CHECK(c.C == 7);
  CHECK(c.X == 1);
  CHECK(c.n == 10);
  CHECK(c.total() == 13);
  CHECK(theorem_a_check(c, class_count(d5)));
}

TEST_CASE("empty configuration") {
  const auto c = sod_counts(0, {});
  CHECK(c.n == 0);
  CHECK(c.total() == 1);
  CHECK(theorem_a_check(c, 1));
  CHECK_FALSE(theorem_a_check(c, 2));
}

TEST_CASE("inconsistent exchanges") {
  using K = CurveActionResult::Kind;
  CHECK_THROWS_AS(sod_counts(1, {{"a", of_kind(K::ExchangedWith, "b")}}), SodError);
  CHECK_THROWS_AS(sod_counts(1, {{"a", of_kind(K::ExchangedWith, "b")}, {"b", of_kind(K::ExchangedWith, "c")},
                                 {"c", of_kind(K::ExchangedWith, "a")}}),
                  SodError);
  CHECK_THROWS_AS(sod_counts(1, {{"a", of_kind(K::ExchangedWith, "a")}}), SodError);
  const auto ok = sod_counts(1, {{"a", of_kind(K::ExchangedWith, "b")}, {"b", of_kind(K::ExchangedWith, "a")},
                                 {"c", of_kind(K::PointwiseFixed)}, {"d", of_kind(K::Involution)}});
  CHECK(ok.X == 1);
  CHECK(ok.P == 1);
  CHECK(ok.n == 2 + 4 - 1);
}

TEST_CASE("reflection classes versus branch components") {
  for (const auto& key : {"g12", "g13", "g22"}) {
    const HilbEngine e(get_case(key));
    const auto r = reflection_classes(e.G(), e.g_table().classes);
    CHECK(corollary_b_check(r, e.group_case().r));
  }
  const HilbEngine g13(get_case("g13"));
  CHECK(reflection_classes(g13.G(), g13.g_table().classes) == 2);
  for (int m : {3, 5}) {
    const HilbEngine d(get_case("g2mm2", m));
    CHECK(reflection_classes(d.G(), d.g_table().classes) == 2);
  }
  CHECK_FALSE(corollary_b_check(1, 2));
}

TEST_CASE("cyclic quotient counts for G(m,m,2)") {
  struct Row {
    int m;
    long r, n, total;
  };
  for (const Row& row : {Row{5, 1, 2, 4}, Row{4, 2, 2, 5}, Row{3, 1, 1, 3}}) {
    CAPTURE(row.m);
    const HilbEngine e(get_case("gmm2", row.m));
    const auto c = gmm2_counts(e.h_table(), verify_branch_factorization(e.group_case()));
    CHECK(c.r == row.r);
    CHECK(c.n == row.n);
    CHECK(c.total() == row.total);
    CHECK(theorem_a_check(c, static_cast<long>(brute_class_count(e.G()))));
  }
  const HilbEngine d3(get_case("gmm2", 3));
  CHECK(d3.G().order() == 6);
  CHECK(brute_class_count(d3.G()) == 3);
}

TEST_CASE("count sanity for every case") {
  for (const auto& key : {"g12", "g13", "g22"}) {
    const HilbEngine e(get_case(key));
    const auto c = sod_counts(e.group_case().r, classify_all(e));
    CHECK(c.n - 2 * c.P == c.C - c.X);
    CHECK(c.C - c.X >= 0);
  }
}
