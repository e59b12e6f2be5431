#include "doctest.h"

#include <algorithm>
#include <set>

#include "twoassoc/associahedron.hpp"
#include "twoassoc/enumerate_wn.hpp"
#include "twoassoc/poset_io.hpp"

using namespace twoassoc;

namespace {

std::vector<int> rank_counts(const RankedPoset& p) {
  std::vector<int> counts;
  for (int x = 0; x < p.size(); ++x) {
    if (p.rank(x) >= static_cast<int>(counts.size())) counts.resize(p.rank(x) + 1);
    ++counts[p.rank(x)];
  }
  return counts;
}

TwoBracket tb(Interval B, std::vector<Extent> e) { return TwoBracket{B, std::move(e)}; }

// The stacked element of W_(1,1): a 2-bracket around point 1 of line 1 and one
// around point 1 of line 2, the first below the second.
TwoBracketing stacked_11() {
  return TwoBracketing({1, 1}, Bracketing(2, {{1, 2}}),
                       {TwoBracket::maximal({1, 1}), TwoBracket::singleton(1, 1), TwoBracket::singleton(2, 1),
                        tb({1, 2}, {Extent::points(1, 1), Extent::gap(0)}),
                        tb({1, 2}, {Extent::gap(1), Extent::points(1, 1)})});
}

}  // namespace

TEST_CASE("n vectors") {
  CHECK(parse_n("2,1") == NVector{2, 1});
  CHECK(parse_n("3") == NVector{3});
  CHECK(n_to_text({1, 1}) == "(1,1)");
  CHECK(total_points({2, 0, 3}) == 5);
  CHECK_NOTHROW(require_valid_n({0, 1}));
  CHECK_THROWS_AS(require_valid_n({0, 0}), DomainError);
  CHECK_THROWS_AS(require_valid_n({}), DomainError);
  CHECK_THROWS_AS(require_valid_n({1, -1}), DomainError);
  try {
    require_valid_n({0, 0});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("n != 0") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_n("1,x"), DomainError);
  CHECK_THROWS_AS(parse_n(""), DomainError);
}

TEST_CASE("extents") {
  CHECK(Extent::points(1, 2).to_text() == "1-2");
  CHECK(Extent::gap(0).to_text() == "^0");
  CHECK(Extent::gap(0).point_count() == 0);
  CHECK(Extent::points(2, 4).point_count() == 3);

  CHECK(extent_within(Extent::points(2, 2), Extent::points(1, 3)));
  CHECK_FALSE(extent_within(Extent::points(1, 3), Extent::points(2, 2)));
  // gaps touching a run of points count as inside it
  CHECK(extent_within(Extent::gap(0), Extent::points(1, 2)));
  CHECK(extent_within(Extent::gap(1), Extent::points(1, 2)));
  CHECK(extent_within(Extent::gap(2), Extent::points(1, 2)));
  CHECK_FALSE(extent_within(Extent::gap(3), Extent::points(1, 2)));
  CHECK(extent_within(Extent::gap(1), Extent::gap(1)));
  CHECK_FALSE(extent_within(Extent::points(1, 1), Extent::gap(1)));

  CHECK(extent_side(Extent::points(1, 1), Extent::points(2, 3)) == -1);
  CHECK(extent_side(Extent::points(2, 3), Extent::points(1, 1)) == 1);
  CHECK(extent_side(Extent::gap(0), Extent::points(1, 1)) == -1);
  CHECK(extent_side(Extent::gap(1), Extent::points(1, 1)) == 1);
  CHECK(extent_side(Extent::gap(2), Extent::gap(2)) == 0);
  CHECK_FALSE(extent_side(Extent::points(1, 2), Extent::points(2, 3)).has_value());
}

TEST_CASE("two-brackets") {
  auto m = TwoBracket::maximal({2, 0, 1});
  CHECK(m.to_text() == "[1,3]{1-2;^0;1-1}");
  CHECK(m.point_count() == 3);
  auto s = TwoBracket::singleton(2, 3);
  CHECK(s.is_point_singleton());
  CHECK(s.to_text() == "[2,2]{3-3}");
  CHECK(two_bracket_contains(m, TwoBracket::singleton(1, 2)));
  CHECK_FALSE(two_bracket_contains(TwoBracket::singleton(1, 2), m));

  auto low = tb({1, 2}, {Extent::points(1, 1), Extent::gap(0)});
  auto high = tb({1, 2}, {Extent::gap(1), Extent::points(1, 1)});
  CHECK(two_bracket_side(low, high) == -1);
  CHECK(two_bracket_side(high, low) == 1);
  CHECK(compatible(low, high));
  // same lines, crossing sides
  auto a = tb({1, 2}, {Extent::points(1, 1), Extent::gap(1)});
  auto b = tb({1, 2}, {Extent::gap(1), Extent::points(1, 1)});
  CHECK_FALSE(two_bracket_side(a, b).has_value());
  CHECK_FALSE(compatible(a, b));
  // overlapping runs on one line
  CHECK_FALSE(compatible(tb({1, 1}, {Extent::points(1, 2)}), tb({1, 1}, {Extent::points(2, 3)})));
  // crossing brackets
  CHECK_FALSE(compatible(tb({1, 2}, {Extent::points(1, 1), Extent::points(1, 1)}),
                         tb({2, 3}, {Extent::points(1, 1), Extent::points(1, 1)})));
}

TEST_CASE("validation of hand-built 2-bracketings") {
  CHECK(validate_two_bracketing(top_element({1, 1})));
  CHECK(validate_two_bracketing(stacked_11()));
  CHECK(stacked_11().label() == "(..) [1,2]{1-1;^0} [1,2]{^1;1-1}");
  CHECK(top_element({1, 1}).label() == "(..)");

  SUBCASE("missing maximal 2-bracket") {
    TwoBracketing x({1, 1}, Bracketing(2, {{1, 2}}), {TwoBracket::singleton(1, 1), TwoBracket::singleton(2, 1)});
    auto v = explain_two_bracketing(x);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.reason.empty());
  }
  SUBCASE("missing point singleton") {
    TwoBracketing x({1, 1}, Bracketing(2, {{1, 2}}), {TwoBracket::maximal({1, 1}), TwoBracket::singleton(1, 1)});
    CHECK_FALSE(validate_two_bracketing(x));
  }
  SUBCASE("2-bracket without points") {
    auto x = top_element({1, 1});
    x = TwoBracketing(x.n, x.bracketing, [&] {
      auto v = x.two_brackets;
      v.push_back(tb({1, 2}, {Extent::gap(0), Extent::gap(1)}));
      return v;
    }());
    CHECK_FALSE(validate_two_bracketing(x));
  }
  SUBCASE("a single child is not a stack") {
    auto x = top_element({1, 1});
    auto v = x.two_brackets;
    v.push_back(tb({1, 2}, {Extent::points(1, 1), Extent::gap(0)}));
    CHECK_FALSE(validate_two_bracketing(TwoBracketing(x.n, x.bracketing, v)));
  }
  SUBCASE("incompatible pair") {
    auto x = top_element({1, 1});
    auto v = x.two_brackets;
    v.push_back(tb({1, 2}, {Extent::points(1, 1), Extent::gap(1)}));
    v.push_back(tb({1, 2}, {Extent::gap(1), Extent::points(1, 1)}));
    CHECK_FALSE(validate_two_bracketing(TwoBracketing(x.n, x.bracketing, v)));
  }
  SUBCASE("malformed input throws") {
    auto x = top_element({1, 1});
    auto v = x.two_brackets;
    v.push_back(tb({1, 2}, {Extent::points(1, 2), Extent::gap(0)}));  // line 1 has one point
    CHECK_THROWS_AS(explain_two_bracketing(TwoBracketing(x.n, x.bracketing, v)), DomainError);
    auto w = x.two_brackets;
    w.push_back(tb({1, 2}, {Extent::points(1, 1)}));
    CHECK_THROWS_AS(explain_two_bracketing(TwoBracketing(x.n, x.bracketing, w)), DomainError);
  }
}

TEST_CASE("forgetful map, removables and restriction") {
  auto x = stacked_11();
  CHECK(forgetful_map(x) == Bracketing(2, {{1, 2}}));
  auto rem = removables(x);
  CHECK(rem.brackets.empty());
  CHECK(rem.two_brackets.size() == 2);
  CHECK(removables(top_element({2, 1})).two_brackets.empty());

  auto top = top_element({1, 0, 2});
  CHECK(forgetful_map(top).to_tree() == Tree::corolla(3));
  auto r = restrict_to_bracket(top, {1, 3});
  CHECK(r.n == NVector{1, 0, 2});
  CHECK(validate_two_bracketing(r));
  auto line = restrict_to_bracket(top, {3, 3});
  CHECK(line.n == NVector{2});
  CHECK(validate_two_bracketing(line));
  CHECK_THROWS_AS(restrict_to_bracket(top, {2, 2}), DomainError);  // n(B) = 0
  CHECK_THROWS_AS(restrict_to_bracket(top, {1, 2}), DomainError);  // not a bracket
}

TEST_CASE("restrictions of enumerated elements stay valid") {
  for (const auto& x : enumerate_two_bracketings({2, 1, 1})) {
    for (const auto& B : x.bracketing.with_singletons()) {
      int pts = 0;
      for (int i = B.lo; i <= B.hi; ++i) pts += x.n[i - 1];
      if (pts == 0) continue;
      CHECK(validate_two_bracketing(restrict_to_bracket(x, B)));
    }
  }
}

TEST_CASE("2-bracketing json round trip") {
  auto x = stacked_11();
  auto doc = two_bracketing_to_json(x);
  CHECK(doc["n"].dump() == "[1,1]");
  CHECK(two_bracketing_from_json(nlohmann::json::parse(doc.dump())) == x);
  for (const auto& y : enumerate_two_bracketings({1, 0, 1}))
    CHECK(two_bracketing_from_json(nlohmann::json::parse(two_bracketing_to_json(y).dump())) == y);
}

TEST_CASE("W_n sizes") {
  struct Case {
    NVector n;
    int size;
    std::vector<int> ranks;
  };
  const std::vector<Case> cases{
      {{1}, 1, {1}},
      {{2}, 1, {1}},
      {{3}, 3, {2, 1}},
      {{1, 1}, 3, {2, 1}},
      {{1, 0}, 1, {1}},
      {{0, 1}, 1, {1}},
      {{2, 0}, 3, {2, 1}},
      {{2, 1}, 17, {8, 8, 1}},
      {{1, 2}, 17, {8, 8, 1}},
      {{1, 0, 1}, 9, {4, 4, 1}},
      {{0, 0, 1}, 3, {2, 1}},
      {{1, 1, 1}, 99, {32, 48, 18, 1}},
      {{2, 2}, 141, {44, 69, 27, 1}},
  };
  for (const auto& c : cases) {
    CAPTURE(n_to_text(c.n));
    auto w = enumerate_Wn(c.n);
    CHECK(w.poset.size() == c.size);
    CHECK(rank_counts(w.poset) == c.ranks);
    REQUIRE(w.poset.maximum());
    CHECK(w.poset.rank(*w.poset.maximum()) == top_rank(c.n));
    CHECK(w.elements[*w.poset.maximum()] == top_element(c.n));
    CHECK(is_graded(w.poset));
  }
  for (const auto& [n, size] : std::vector<std::pair<NVector, int>>{
           {{3, 2}, 1227}, {{2, 1, 1}, 983}, {{4, 1}, 829}, {{1, 2, 1}, 1137}, {{5, 0}, 381}}) {
    CAPTURE(n_to_text(n));
    CHECK(enumerate_Wn(n).poset.size() == size);
  }
}

TEST_CASE("fibers of W_(1,1,1) and W_(1,0,1)") {
  auto w = enumerate_Wn({1, 1, 1});
  std::map<std::string, int> fiber;
  for (const auto& pi : w.pi_labels) ++fiber[pi];
  CHECK(fiber == std::map<std::string, int>{{"(.(..))", 37}, {"((..).)", 37}, {"(...)", 25}});

  auto v = enumerate_Wn({1, 0, 1});
  std::map<std::string, int> f2;
  for (const auto& pi : v.pi_labels) ++f2[pi];
  for (const auto& [t, c] : f2) CHECK(c == 3);
  CHECK(f2.size() == 3);
}

TEST_CASE("W_n elements are valid and distinct") {
  for (const NVector& n : {NVector{2, 1}, NVector{1, 1, 1}, NVector{0, 2, 1}}) {
    auto w = enumerate_Wn(n);
    std::set<std::string> labels;
    for (int x = 0; x < w.poset.size(); ++x) {
      CHECK(validate_two_bracketing(w.elements[x]));
      CHECK(w.poset.label(x) == w.elements[x].label());
      CHECK(w.pi_labels[x] == forgetful_map(w.elements[x]).to_tree().to_text());
      labels.insert(w.poset.label(x));
    }
    CHECK(labels.size() == static_cast<std::size_t>(w.poset.size()));
  }
}

TEST_CASE("the forgetful map is order preserving") {
  auto w = enumerate_Wn({2, 1});
  auto k = enumerate_Kr(2);
  for (const auto& [lo, hi] : w.poset.covers()) {
    auto a = forgetful_map(w.elements[lo]).brackets();
    auto b = forgetful_map(w.elements[hi]).brackets();
    CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end()));
  }
  CHECK(k.size() == 1);
}

TEST_CASE("top ranks") {
  CHECK(top_rank({1}) == 0);
  CHECK(top_rank({2}) == 0);
  CHECK(top_rank({3}) == 1);
  CHECK(top_rank({1, 1}) == 1);
  CHECK(top_rank({1, 0}) == 0);
  CHECK(top_rank({1, 1, 1}) == 3);
}

TEST_CASE("completed W_n") {
  auto hat = completed(enumerate_Wn({1, 1}));
  CHECK(hat.size() == 4);
  CHECK(hat.rank(0) == -1);
  CHECK(hat.label(0) == "min");
  CHECK(verify_eulerian(hat).eulerian());
  CHECK(alternating_sum(hat) == 0);
}

TEST_CASE("W_(n) is K_n when r = 1") {
  for (int n = 1; n <= 6; ++n) {
    auto w = enumerate_Wn({n});
    std::vector<std::string> labels;
    for (const auto& x : w.elements) {
      std::vector<Interval> runs;
      for (const auto& b : x.two_brackets)
        if (!b.extents[0].is_gap) runs.push_back({b.extents[0].lo, b.extents[0].hi});
      labels.push_back(Bracketing(n, runs).to_tree().to_text());
    }
    RankedPoset relabeled(w.poset.ranks(), w.poset.covers(), labels);
    CHECK(identical(relabeled.canonicalized(), enumerate_Kr(n)));
  }
}

TEST_CASE("size cap") {
  EnumerationLimits limits;
  limits.max_elements = 10;
  CHECK_THROWS_AS(enumerate_Wn({2, 1}, limits), SizeCapExceeded);
  CHECK_NOTHROW(enumerate_Wn({1, 1}, limits));
  CHECK_THROWS_AS(enumerate_Wn({0, 0}), DomainError);
}
