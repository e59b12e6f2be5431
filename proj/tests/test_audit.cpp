#include "doctest.h"

#include "twoassoc/audit.hpp"
#include "twoassoc/poset_family.hpp"

using namespace twoassoc;

TEST_CASE("audit report bookkeeping") {
  AuditReport r;
  r.add("g", "one", {{"k", 1}}, "1", "1");
  r.add("g", "two", {{"k", 2}}, "1", "0");
  CHECK(r.checks().size() == 2);
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.all_pass());
  auto doc = r.to_json();
  CHECK(doc["summary"]["total"] == 2);
  CHECK(doc["summary"]["passed"] == 1);
  CHECK(doc["summary"]["failed"] == 1);
  CHECK(doc["checks"][1]["pass"] == false);
  CHECK(r.to_table().find("1/2 checks passed") != std::string::npos);

  AuditReport other;
  other.add("h", "three", nullptr, "x", "x");
  r.merge(other);
  CHECK(r.checks().size() == 3);
  CHECK(r.passed() == 2);
}

TEST_CASE("audit_counts") {
  for (const NVector& n : {NVector{3}, NVector{1, 1}, NVector{2, 1}, NVector{1, 0, 1}}) {
    auto r = audit_counts(n, 4);
    CHECK(r.checks().size() > 0);
    CHECK(r.all_pass());
  }
  auto w = enumerate_Wn({1, 1, 1});
  CHECK(audit_counts({1, 1, 1}, 3, &w).all_pass());
}

TEST_CASE("audit_eulerian") {
  for (const NVector& n : {NVector{1}, NVector{4}, NVector{1, 1}, NVector{2, 1}, NVector{1, 1, 1}}) {
    CAPTURE(n_to_text(n));
    auto r = audit_eulerian(n);
    CHECK(r.all_pass());
  }
}

TEST_CASE("fiber product sums") {
  auto w11 = enumerate_Wn({1, 1});
  auto w10 = enumerate_Wn({1, 0});
  auto w01 = enumerate_Wn({0, 1});
  auto single = fiber_product_sum({w11});
  CHECK(single.elements == 3);
  CHECK(single.alternating_sum == 1);
  auto two = fiber_product_sum({w10, w01});
  CHECK(two.elements == 1);
  CHECK(two.alternating_sum == 1);
  auto three = fiber_product_sum({w11, w11, w10});
  CHECK(three.alternating_sum == 1);
  CHECK(three.elements > 0);
}

TEST_CASE("audit_identities on a small range") {
  auto r = audit_identities({{1}, {2}, {1, 1}, {2, 1}}, {1, 2}, 4);
  for (const auto& c : r.checks())
    if (!c.pass) MESSAGE(c.name << " " << c.instance.dump() << " expected " << c.expected << " got " << c.observed);
  CHECK(r.all_pass());
}

TEST_CASE("reduced-product family") {
  CHECK(bounded_graded_posets(6, -1).size() + bounded_graded_posets(6, 0).size() > 0);
}

TEST_CASE("desk range") {
  auto ns = desk_n_list();
  int r1 = 0, r2 = 0, r3 = 0;
  for (const auto& n : ns) {
    CHECK(total_points(n) > 0);
    if (n.size() == 1) {
      ++r1;
      CHECK(total_points(n) <= 8);
    }
    if (n.size() == 2) {
      ++r2;
      CHECK(total_points(n) <= 5);
    }
    if (n.size() == 3) {
      ++r3;
      CHECK(total_points(n) <= 4);
    }
  }
  CHECK(r1 == 8);
  CHECK(r2 == 20);
  CHECK(r3 == 34);
}
