#include "doctest.h"

#include <algorithm>
#include <set>

#include "twoassoc/associahedron.hpp"
#include "twoassoc/series.hpp"

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

}  // namespace

TEST_CASE("tree text") {
  CHECK(Tree::parse(".").is_leaf());
  auto t = Tree::parse("((..).)");
  CHECK(t.leaf_count() == 3);
  CHECK(t.internal_count() == 2);
  CHECK(t.to_text() == "((..).)");
  CHECK(Tree::corolla(4).to_text() == "(....)");
  CHECK(Tree::corolla(1).is_leaf());
  for (const char* bad : {"", "(", "(.)", "(..", "..", "(..))", "(.x)", "()"})
    CHECK_THROWS_AS(Tree::parse(bad), DomainError);
  CHECK_THROWS_AS(Tree::node({Tree::leaf()}), DomainError);
  CHECK_THROWS_AS(Tree::corolla(0), DomainError);
}

TEST_CASE("dim_tree") {
  CHECK(dim_tree(Tree::leaf()) == 0);
  for (int r = 2; r <= 7; ++r) CHECK(dim_tree(Tree::corolla(r)) == r - 2);
  CHECK(dim_tree(Tree::parse("((..).)")) == 0);
}

TEST_CASE("concat") {
  CHECK(concat({Tree::leaf()}).is_leaf());
  auto two = concat({Tree::leaf(), Tree::leaf()});
  CHECK(two == Tree::corolla(2));
  CHECK(dim_tree(two) == 0);
  auto t = concat({Tree::corolla(3), Tree::leaf()});
  CHECK(dim_tree(t) == 1);
  CHECK(t.leaf_count() == 4);
  CHECK(t.to_text() == "((...).)");
  CHECK_THROWS_AS(concat({}), DomainError);
}

TEST_CASE("concatenation dimension formula") {
  for (int r = 1; r <= 4; ++r)
    for (const auto& a : all_trees(r))
      for (const auto& b : all_trees(5 - r)) {
        auto t = concat({a, b});
        CHECK(dim_tree(t) == dim_tree(a) + dim_tree(b));
        CHECK(t.leaf_count() == 5);
      }
}

TEST_CASE("root_decompose") {
  auto parts = root_decompose(Tree::corolla(2));
  CHECK(parts.size() == 2);
  CHECK(parts[0].is_leaf());
  CHECK(parts[1].is_leaf());
  CHECK(root_decompose(Tree::corolla(5)).size() == 5);
  CHECK_THROWS_AS(root_decompose(Tree::leaf()), DomainError);
  for (int r = 2; r <= 6; ++r)
    for (const auto& t : all_trees(r)) {
      auto kids = root_decompose(t);
      CHECK(kids.size() >= 2);
      CHECK(concat(kids) == t);
    }
}

TEST_CASE("all_trees is deterministic and complete") {
  // little Schroeder numbers
  const std::vector<std::size_t> expected{1, 1, 3, 11, 45, 197, 903, 4279};
  for (int r = 1; r <= 8; ++r) {
    auto ts = all_trees(r);
    CHECK(ts.size() == expected[r - 1]);
    std::set<std::string> texts;
    for (const auto& t : ts) texts.insert(t.to_text());
    CHECK(texts.size() == ts.size());
  }
  CHECK(all_trees(3)[0] == Tree::parse("(.(..))"));
  CHECK(all_trees(3)[1] == Tree::parse("((..).)"));
  CHECK(all_trees(3)[2] == Tree::parse("(...)"));
  CHECK_THROWS_AS(all_trees(0), DomainError);
}

TEST_CASE("bracketings") {
  auto t = Tree::parse("((..)(..))");
  auto b = Bracketing::from_tree(t);
  CHECK(b.r() == 4);
  CHECK(b.brackets().size() == 3);
  CHECK(b.dim() == dim_tree(t));
  CHECK(b.to_tree() == t);
  CHECK(b.contains({1, 2}));
  CHECK(b.contains({3, 3}));
  CHECK_FALSE(b.contains({2, 3}));
  CHECK(b.with_singletons().size() == 7);
  CHECK(b.children_of({1, 4}) == std::vector<Interval>{{1, 2}, {3, 4}});
  CHECK(b.children_of({1, 2}) == std::vector<Interval>{{1, 1}, {2, 2}});

  CHECK_THROWS_AS(Bracketing(4, {{1, 2}}), DomainError);         // no full bracket
  CHECK_THROWS_AS(Bracketing(4, {{1, 4}, {1, 2}, {2, 3}}), DomainError);  // crossing
  CHECK_THROWS_AS(Bracketing(4, {{1, 5}}), DomainError);
  CHECK_THROWS_AS(Bracketing(0, {}), DomainError);

  auto side = Bracketing(4, {{1, 4}, {1, 2}});
  CHECK(side.removable() == std::vector<Interval>{{1, 2}});
  CHECK(Bracketing(4, {{1, 4}}).removable().empty());

  for (int r = 1; r <= 6; ++r)
    for (const auto& tree : all_trees(r)) {
      auto br = Bracketing::from_tree(tree);
      CHECK(br.to_tree() == tree);
      CHECK(br.dim() == dim_tree(tree));
      auto back = bracketing_from_json(nlohmann::json::parse(bracketing_to_json(br).dump()));
      CHECK(back == br);
    }
}

TEST_CASE("bracketing json lists singletons") {
  auto b = Bracketing(3, {{1, 3}, {1, 2}});
  CHECK(bracketing_to_json(b).dump() == R"({"r":3,"brackets":[[1,3],[1,2],[1,1],[2,2],[3,3]]})");
}

TEST_CASE("enumerate_Kr examples") {
  auto k1 = enumerate_Kr(1);
  CHECK(k1.size() == 1);
  CHECK(k1.rank(0) == 0);

  auto k3 = enumerate_Kr(3);
  CHECK(rank_counts(k3) == std::vector<int>{2, 1});

  auto k4 = enumerate_Kr(4);
  CHECK(k4.size() == 11);
  CHECK(rank_counts(k4) == std::vector<int>{5, 5, 1});
  CHECK(k4.label(*k4.maximum()) == "(....)");

  for (int r = 2; r <= 7; ++r) {
    auto k = enumerate_Kr(r);
    REQUIRE(k.maximum());
    CHECK(k.rank(*k.maximum()) == r - 2);
    CHECK(k.label(*k.maximum()) == Tree::corolla(r).to_text());
  }
  CHECK_THROWS_AS(enumerate_Kr(0), DomainError);
}

TEST_CASE("K_r order is reverse inclusion of brackets") {
  auto k4 = enumerate_Kr(4);
  for (int x = 0; x < k4.size(); ++x)
    for (int y = 0; y < k4.size(); ++y) {
      auto bx = Bracketing::from_tree(Tree::parse(k4.label(x))).brackets();
      auto by = Bracketing::from_tree(Tree::parse(k4.label(y))).brackets();
      const bool superset = std::includes(bx.begin(), bx.end(), by.begin(), by.end());
      CHECK(k4.leq(x, y) == superset);
    }
}

TEST_CASE("count_K examples") {
  CHECK(count_K(0, 1) == 1);
  CHECK(count_K(1, 1) == 0);
  CHECK(count_K(2, 4) == 1);
  CHECK(count_K(0, 5) == 14);
  CHECK(count_K(3, 4) == 0);
  CHECK(count_K(-1, 4) == 0);
}

TEST_CASE("count_K, enumeration and solve_f agree") {
  const auto f = solve_f(8);
  for (int r = 1; r <= 8; ++r) {
    auto k = enumerate_Kr(r);
    auto counts = rank_counts(k);
    for (int m = 0; m <= r; ++m) {
      const long long enumerated = m < static_cast<int>(counts.size()) ? counts[m] : 0;
      CHECK(count_K(m, r) == enumerated);
      CHECK(coefficient(f, m, {r}) == enumerated);
    }
  }
}

TEST_CASE("completed K_r is Eulerian and balanced") {
  for (int r = 1; r <= 6; ++r) {
    auto hat = complete_with_min(enumerate_Kr(r), -1);
    CHECK(verify_eulerian(hat).eulerian());
  }
  for (int r = 1; r <= 8; ++r) {
    long long s = 0;
    for (const auto& t : all_trees(r)) s += dim_tree(t) % 2 == 0 ? 1 : -1;
    CHECK(s == 1);
  }
}

TEST_CASE("count_K memo records computed values") {
  const BigInt v = count_K(3, 6);
  REQUIRE(count_K_memo().find({3, 6}).has_value());
  CHECK(*count_K_memo().find({3, 6}) == v);
  CHECK_FALSE(count_K_memo().insert({3, 6}, 0));
}
