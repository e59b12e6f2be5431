#include "twoassoc/audit.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "twoassoc/associahedron.hpp"
#include "twoassoc/cd_index.hpp"
#include "twoassoc/count_w.hpp"
#include "twoassoc/poset_family.hpp"
#include "twoassoc/series.hpp"

namespace twoassoc {

void AuditReport::add(std::string group, std::string name, nlohmann::ordered_json instance, std::string expected,
                      std::string observed) {
  const bool pass = expected == observed;
  checks_.push_back(AuditCheck{std::move(group), std::move(name), std::move(instance), std::move(expected),
                               std::move(observed), pass});
}

void AuditReport::merge(const AuditReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t AuditReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return c.pass; }));
}

nlohmann::ordered_json AuditReport::to_json() const {
  nlohmann::ordered_json doc;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json row;
    row["group"] = c.group;
    row["name"] = c.name;
    row["instance"] = c.instance;
    row["expected"] = c.expected;
    row["observed"] = c.observed;
    row["pass"] = c.pass;
    list.push_back(std::move(row));
  }
  doc["checks"] = std::move(list);
  doc["summary"] = {{"total", checks_.size()}, {"passed", passed()}, {"failed", failed()}};
  return doc;
}

std::string AuditReport::to_table() const {
  std::size_t wg = 5, wn = 4, wi = 8, we = 8;
  for (const auto& c : checks_) {
    wg = std::max(wg, c.group.size());
    wn = std::max(wn, c.name.size());
    wi = std::max(wi, c.instance.dump().size());
    we = std::max(we, c.expected.size());
  }
  std::ostringstream out;
  auto row = [&](const std::string& g, const std::string& n, const std::string& i, const std::string& e,
                 const std::string& o, const std::string& s) {
    out << std::left << std::setw(static_cast<int>(wg)) << g << "  " << std::setw(static_cast<int>(wn)) << n << "  "
        << std::setw(static_cast<int>(wi)) << i << "  " << std::setw(static_cast<int>(we)) << e << "  " << o << "  "
        << s << "\n";
  };
  row("group", "check", "instance", "expected", "observed", "status");
  for (const auto& c : checks_) row(c.group, c.name, c.instance.dump(), c.expected, c.observed, c.pass ? "PASS" : "FAIL");
  out << passed() << "/" << checks_.size() << " checks passed\n";
  return out.str();
}

namespace {

nlohmann::ordered_json n_instance(const NVector& n) { return {{"n", n}}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AuditReport audit_counts(const NVector& n, int max_degree, const WnPoset* w) {
  require_valid_n(n);
  if (max_degree < total_points(n)) throw DomainError("audit_counts needs D >= |n|");
  WnPoset local;
  if (!w) {
    local = enumerate_Wn(n);
    w = &local;
  }
  std::map<std::pair<std::string, int>, long long> enumerated;
  for (int x = 0; x < w->poset.size(); ++x) ++enumerated[{w->pi_labels[x], w->poset.rank(x)}];

  AuditReport report;
  const int r = static_cast<int>(n.size());
  for (const auto& t : all_trees(r)) {
    const auto series = solve_F(t, max_degree);
    for (int m = 0; m <= top_rank(n) + 1; ++m) {
      const BigInt from_series = coefficient(series, m, n);
      const BigInt from_recurrence = count_W(t, m, n);
      auto it = enumerated.find({t.to_text(), m});
      const BigInt from_enumeration = it == enumerated.end() ? 0 : it->second;
      nlohmann::ordered_json inst{{"n", n}, {"tree", t.to_text()}, {"m", m}, {"D", max_degree}};
      report.add("counts", "series = recurrence = enumeration", inst, from_series.str(),
                 from_recurrence == from_series && from_enumeration == from_series
                     ? from_series.str()
                     : "series " + from_series.str() + ", recurrence " + from_recurrence.str() + ", enumeration " +
                           from_enumeration.str());
    }
  }
  return report;
}

FiberProductCheck fiber_product_sum(const std::vector<WnPoset>& factors) {
  if (factors.empty()) throw DomainError("fiber product of no factors");
  const int r = static_cast<int>(factors[0].n.size());
  const int k = static_cast<int>(factors.size());
  FiberProductCheck out;
  for (const auto& t : all_trees(r)) {
    const auto label = t.to_text();
    const int base = dim_tree(t);
    std::vector<std::vector<int>> fibers(k);
    for (int i = 0; i < k; ++i)
      for (int x = 0; x < factors[i].poset.size(); ++x)
        if (factors[i].pi_labels[x] == label) fibers[i].push_back(factors[i].poset.rank(x));
    // Walk every tuple of the fiber over t.
    auto walk = [&](auto&& self, int i, int rank_sum) -> void {
      if (i == k) {
        ++out.elements;
        out.alternating_sum += ((rank_sum - (k - 1) * base) % 2 == 0) ? 1 : -1;
        return;
      }
      for (int d : fibers[i]) self(self, i + 1, rank_sum + d);
    };
    walk(walk, 0, 0);
  }
  return out;
}

namespace {

void add_fiber_product_checks(AuditReport& report, const std::vector<int>& r_list) {
  for (int r : r_list) {
    if (r > 2) continue;
    std::vector<WnPoset> ws;
    std::vector<NVector> ns;
    NVector m(r, 0);
    auto gen = [&](auto&& self, int i, int left) -> void {
      if (i == r) {
        if (total_points(m) > 0) ns.push_back(m);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        m[i] = v;
        self(self, i + 1, left - v);
      }
    };
    gen(gen, 0, 3);
    for (const auto& v : ns) ws.push_back(enumerate_Wn(v));

    // Per-fiber sums of each factor.
    for (const auto& w : ws)
      for (const auto& t : all_trees(r)) {
        long long s = 0;
        for (int x = 0; x < w.poset.size(); ++x)
          if (w.pi_labels[x] == t.to_text()) s += w.poset.rank(x) % 2 == 0 ? 1 : -1;
        report.add("fiber-product", "fiber sum over T = (-1)^d(T)", {{"n", w.n}, {"tree", t.to_text()}},
                   std::to_string(dim_tree(t) % 2 == 0 ? 1 : -1), std::to_string(s));
      }

    for (int k = 1; k <= 3; ++k) {
      std::vector<int> idx(k, 0);
      while (true) {
        std::vector<WnPoset> factors;
        nlohmann::ordered_json ms = nlohmann::ordered_json::array();
        for (int i : idx) {
          factors.push_back(ws[i]);
          ms.push_back(ws[i].n);
        }
        const auto fp = fiber_product_sum(factors);
        report.add("fiber-product", "A(fiber product over K_r) = 1", {{"r", r}, {"factors", ms}}, "1",
                   std::to_string(fp.alternating_sum));
        int i = k - 1;
        while (i >= 0 && ++idx[i] == static_cast<int>(ws.size())) idx[i--] = 0;
        if (i < 0) break;
      }
    }
  }
}

void add_reduced_product_checks(AuditReport& report) {
  for (int min_rank : {-1, 0}) {
    const auto family = bounded_graded_posets(6, min_rank);
    long long balanced_pairs = 0, balanced_ok = 0, closed_ok = 0, pairs = 0;
    for (const auto& p : family)
      for (const auto& q : family) {
        if (p.size() < 2 || q.size() < 2) continue;
        ++pairs;
        const auto prod = reduced_product(p, q);
        const long long ap = alternating_sum(p), aq = alternating_sum(q), a = alternating_sum(prod);
        const long long ep = p.rank(*p.minimum()) % 2 == 0 ? 1 : -1;
        const long long eq = q.rank(*q.minimum()) % 2 == 0 ? 1 : -1;
        if ((ap - ep) * (aq - eq) - ep * eq == a) ++closed_ok;
        if (ap == 0 && aq == 0) {
          ++balanced_pairs;
          if (a == 0) ++balanced_ok;
        }
      }
    nlohmann::ordered_json inst{{"max_elements", 6}, {"min_rank", min_rank}, {"family", family.size()}};
    report.add("reduced-product", "balanced factors give a balanced product", inst, std::to_string(balanced_pairs),
               std::to_string(balanced_ok));
    report.add("reduced-product", "A = (A(P)-e_P)(A(Q)-e_Q) - e_P e_Q", inst, std::to_string(pairs),
               std::to_string(closed_ok));
  }
}

}  // namespace

AuditReport audit_identities(const std::vector<NVector>& n_list, const std::vector<int>& r_list, int max_degree) {
  AuditReport report;
  const int D = max_degree;

  // f(-1, x) = x + x^2 + ...
  const int f_degree = std::max(D, 12);
  const auto f = eval_t_minus1(solve_f(f_degree));
  for (int r = 1; r <= f_degree; ++r)
    report.add("identities", "[x^r] f(-1,x) = 1", {{"r", r}}, "1", coefficient(f, 0, {r}).str());

  for (int r : r_list) {
    long long euler = 0;
    for (const auto& t : all_trees(r)) euler += dim_tree(t) % 2 == 0 ? 1 : -1;
    report.add("identities", "sum over K_r of (-1)^d = 1", {{"r", r}}, "1", std::to_string(euler));

    std::map<Exponent, BigInt> totals;
    for (const auto& t : all_trees(r)) {
      const auto F = eval_t_minus1(solve_F(t, D));
      const BigInt sign = dim_tree(t) % 2 == 0 ? 1 : -1;
      // Closed form: every monomial with 0 < |n| <= D has coefficient sign.
      long long bad = 0, seen = 0;
      Exponent n(r, 0);
      auto walk = [&](auto&& self, int i, int left) -> void {
        if (i == r) {
          if (total_degree(n) == 0) return;
          ++seen;
          const BigInt c = coefficient(F, 0, n);
          totals[n] += c;
          if (c != sign) ++bad;
          return;
        }
        for (int v = 0; v <= left; ++v) {
          n[i] = v;
          self(self, i + 1, left - v);
        }
      };
      walk(walk, 0, D);
      if (static_cast<long long>(F.terms().size()) != seen) ++bad;
      report.add("identities", "F_T(-1,x) = (-1)^d(T) (1/prod(1-x_i) - 1)", {{"tree", t.to_text()}, {"D", D}},
                 "0 mismatches", std::to_string(bad) + " mismatches");
    }
    long long off = 0;
    for (const auto& [n, c] : totals)
      if (c != 1) ++off;
    report.add("identities", "sum over T of [x^n] F_T(-1,x) = 1", {{"r", r}, {"D", D}}, "0 mismatches",
               std::to_string(off) + " mismatches");
  }

  for (const auto& n : n_list) {
    const auto w = enumerate_Wn(n);
    const auto hat = completed(w);
    report.add("identities", "A(W_n) = 1", n_instance(n), "1", std::to_string(alternating_sum(w.poset)));
    report.add("identities", "A(completed W_n) = 0", n_instance(n), "0", std::to_string(alternating_sum(hat)));
    for (const auto& t : all_trees(static_cast<int>(n.size()))) {
      long long s = 0;
      for (int x = 0; x < w.poset.size(); ++x)
        if (w.pi_labels[x] == t.to_text()) s += w.poset.rank(x) % 2 == 0 ? 1 : -1;
      report.add("identities", "fiber sum over T = (-1)^d(T)", {{"n", n}, {"tree", t.to_text()}},
                 std::to_string(dim_tree(t) % 2 == 0 ? 1 : -1), std::to_string(s));
    }
  }

  add_fiber_product_checks(report, r_list);
  add_reduced_product_checks(report);
  return report;
}

AuditReport audit_eulerian(const NVector& n, const WnPoset* w) {
  require_valid_n(n);
  WnPoset local;
  if (!w) {
    local = enumerate_Wn(n);
    w = &local;
  }
  const auto hat = completed(*w);
  const auto inst = n_instance(n);
  AuditReport report;

  const auto eul = verify_eulerian(hat);
  report.add("eulerian", "graded", inst, "yes", yes_no(eul.graded));
  report.add("eulerian", "unbalanced intervals", inst, "0", std::to_string(eul.unbalanced.size()));
  report.add("eulerian", "diamond violations", inst, "0", std::to_string(diamond_violations(hat).size()));
  report.add("eulerian", "mobius(x,y) != (-1)^(rank difference)", inst, "0",
             std::to_string(mobius_violations(hat).size()));

  const int bottom = 0;
  const int top = *hat.maximum();
  long long sub_bad = 0, super_bad = 0;
  for (int x = 1; x < hat.size(); ++x) {
    if (!is_balanced(hat, bottom, x)) ++sub_bad;
    if (x != top && !is_balanced(hat, x, top)) ++super_bad;
  }
  report.add("eulerian", "sublevel intervals [min, x] balanced", inst, "0 unbalanced",
             std::to_string(sub_bad) + " unbalanced");
  report.add("eulerian", "superlevel intervals [x, max] balanced", inst, "0 unbalanced",
             std::to_string(super_bad) + " unbalanced");

  const auto rewrite = rewrite_ab_to_cd(ab_index(flag_h_vector(flag_f_vector(hat))));
  report.add("eulerian", "cd-index rewriting remainder", inst, "0 words",
             std::to_string(rewrite.remainder.size()) + " words");
  return report;
}

std::vector<NVector> desk_n_list() {
  std::vector<NVector> out;
  for (int v = 1; v <= 8; ++v) out.push_back({v});
  auto add_all = [&](int r, int max_total) {
    NVector n(r, 0);
    auto gen = [&](auto&& self, int i, int left) -> void {
      if (i == r) {
        if (total_points(n) > 0) out.push_back(n);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        n[i] = v;
        self(self, i + 1, left - v);
      }
    };
    gen(gen, 0, max_total);
  };
  add_all(2, 5);
  add_all(3, 4);
  std::sort(out.begin(), out.end(), [](const NVector& a, const NVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (total_points(a) != total_points(b)) return total_points(a) < total_points(b);
    return a < b;
  });
  return out;
}

AuditReport audit_desk() {
  AuditReport report;
  const auto ns = desk_n_list();
  std::vector<NVector> small;
  for (const auto& n : ns) {
    const auto w = enumerate_Wn(n);
    report.merge(audit_counts(n, total_points(n), &w));
    report.merge(audit_eulerian(n, &w));
    if (n.size() > 1 || total_points(n) <= 5) small.push_back(n);
  }
  report.merge(audit_identities(small, {1, 2, 3}, 6));
  return report;
}

}  // namespace twoassoc
