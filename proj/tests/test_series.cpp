#include "doctest.h"

#include "twoassoc/associahedron.hpp"
#include "twoassoc/series.hpp"

using namespace twoassoc;

namespace {

BigInt at_t_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

}  // namespace

TEST_CASE("laurent polynomials") {
  auto t = LaurentPoly::monomial(1);
  LaurentPoly p = LaurentPoly(5) + LaurentPoly::monomial(1, 5) + t * t;
  CHECK(p.to_string() == "5 + 5t + t^2");
  CHECK(p.at_minus_one() == 1);
  CHECK(p.is_nonnegative_polynomial());
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string() == "0");
  auto q = LaurentPoly::monomial(-1) - LaurentPoly(2);
  CHECK(q.to_string() == "t^-1 - 2");
  CHECK_FALSE(q.is_nonnegative_polynomial());
  CHECK(q.min_exponent() == -1);
  CHECK(q.shifted(1).to_string() == "1 - 2t");
  CHECK((-q).coefficient(0) == 2);
  CHECK(LaurentPoly::monomial(3, 0).is_zero());
}

TEST_CASE("series arithmetic") {
  auto x = TruncatedSeries::variable(1, 4, 0);
  auto one = TruncatedSeries::constant(1, 4, LaurentPoly(1));
  auto g = geometric_inverse(x);
  for (int d = 1; d <= 4; ++d) CHECK(g.at({d}) == LaurentPoly(1));
  CHECK(g.at({0}).is_zero());
  CHECK_THROWS_AS(geometric_inverse(one), DomainError);
  // (1 - x)(1 + x + x^2 + ...) = 1 up to truncation
  auto prod = (one - x) * (one + g);
  CHECK(prod == one);
  CHECK(multiply(x, x).at({2}) == LaurentPoly(1));
  CHECK(add(x, x).at({1}) == LaurentPoly(2));
  CHECK_THROWS_AS(x + TruncatedSeries::variable(2, 4, 0), DomainError);
  CHECK_THROWS_AS(x * TruncatedSeries::variable(1, 3, 0), DomainError);

  TruncatedSeries s(2, 2);
  s.add_term({2, 1}, LaurentPoly(7));
  CHECK(s.terms().empty());
  auto e = TruncatedSeries::variable(1, 3, 0).embedded(3, 2);
  CHECK(e.at({0, 0, 1}) == LaurentPoly(1));
  CHECK(x.shifted(2).at({1}) == LaurentPoly::monomial(2));
}

TEST_CASE("solve_f examples") {
  auto f = solve_f(5);
  CHECK(f.at({1}).to_string() == "1");
  CHECK(f.at({2}).to_string() == "1");
  CHECK(f.at({3}).to_string() == "2 + t");
  CHECK(f.at({4}).to_string() == "5 + 5t + t^2");
  CHECK(f.at({5}).to_string() == "14 + 21t + 9t^2 + t^3");
  CHECK(f_step(f) == f);
  CHECK(coefficient(f, 1, {4}) == 5);
  CHECK(coefficient(f, 7, {4}) == 0);
  CHECK_THROWS_AS(coefficient(f, 0, {6}), DomainError);
  CHECK_THROWS_AS(coefficient(f, 0, {1, 1}), DomainError);
}

TEST_CASE("solve_f agrees with tree enumeration") {
  const int D = 8;
  auto f = solve_f(D);
  for (int r = 1; r <= D; ++r) {
    LaurentPoly expected;
    for (const auto& t : all_trees(r)) expected += LaurentPoly::monomial(dim_tree(t));
    CHECK(f.at({r}) == expected);
  }
}

TEST_CASE("f at t = -1") {
  auto f = eval_t_minus1(solve_f(12));
  for (int r = 1; r <= 12; ++r) CHECK(coefficient(f, 0, {r}) == 1);
}

TEST_CASE("closed form for f") {
  for (int D : {1, 4, 12}) {
    auto check = check_f_closed_form(D);
    CHECK(check.holds);
    CHECK_FALSE(check.first_mismatch.has_value());
  }
  // a perturbed series must be caught
  auto f = solve_f(6);
  f.add_term({4}, LaurentPoly(1));
  auto bad = check_f_closed_form(f);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(total_degree(*bad.first_mismatch) == 4);
}

TEST_CASE("solve_F on a leaf is solve_f") {
  CHECK(solve_F(Tree::leaf(), 6) == solve_f(6));
}

TEST_CASE("solve_F examples for two lines") {
  auto F = solve_F(Tree::corolla(2), 4);
  CHECK(F.vars() == 2);
  CHECK(F.at({1, 0}).to_string() == "1");
  CHECK(F.at({0, 1}).to_string() == "1");
  CHECK(F.at({1, 1}).to_string() == "2 + t");
  CHECK(F.at({2, 0}).to_string() == "2 + t");
  CHECK(F.at({2, 1}).to_string() == "8 + 8t + t^2");
  CHECK(F.at({1, 2}).to_string() == "8 + 8t + t^2");
  CHECK(F.at({0, 0}).is_zero());
  CHECK(F_step(Tree::corolla(2), F) == F);
}

TEST_CASE("solve_F fibers for three lines") {
  const std::map<std::string, int> fiber{{"(.(..))", 37}, {"((..).)", 37}, {"(...)", 25}};
  for (const auto& t : all_trees(3)) {
    auto F = solve_F(t, 3);
    CHECK(at_t_one(F.at({1, 1, 1})) == fiber.at(t.to_text()));
    CHECK(at_t_one(F.at({0, 0, 1})) == 1);
    CHECK(at_t_one(F.at({1, 0, 1})) == 3);
  }
}

TEST_CASE("solve_F coefficients are nonnegative polynomials") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& t : all_trees(r)) {
      auto F = solve_F(t, 5);
      for (const auto& [n, c] : F.terms()) {
        CHECK(c.is_nonnegative_polynomial());
        CHECK(total_degree(n) >= 1);
      }
    }
}

TEST_CASE("F_T at t = -1") {
  for (int r = 1; r <= 3; ++r) {
    std::map<Exponent, BigInt> totals;
    for (const auto& t : all_trees(r)) {
      auto F = eval_t_minus1(solve_F(t, 6));
      const BigInt sign = dim_tree(t) % 2 == 0 ? 1 : -1;
      std::size_t seen = 0;
      Exponent n(r, 0);
      auto walk = [&](auto&& self, int i, int left) -> void {
        if (i == r) {
          if (total_degree(n) == 0) return;
          ++seen;
          CHECK(coefficient(F, 0, n) == sign);
          totals[n] += coefficient(F, 0, n);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          n[i] = v;
          self(self, i + 1, left - v);
        }
      };
      walk(walk, 0, 6);
      CHECK(F.terms().size() == seen);
    }
    for (const auto& [n, c] : totals) CHECK(c == 1);
  }
}

TEST_CASE("series json") {
  auto f = solve_f(3);
  auto doc = series_to_json(f);
  CHECK(doc["vars"] == 1);
  CHECK(doc["max_degree"] == 3);
  CHECK(doc["terms"].size() == 3);
  CHECK(doc["terms"][2].dump() == R"({"n":[3],"t_poly":[[0,"2"],[1,"1"]]})");
}
