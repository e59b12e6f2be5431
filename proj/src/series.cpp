#include "twoassoc/series.hpp"

#include <numeric>
#include <stdexcept>

#include "twoassoc/memo.hpp"
#include "twoassoc/poset.hpp"

namespace twoassoc {

int total_degree(const Exponent& n) { return std::accumulate(n.begin(), n.end(), 0); }

TruncatedSeries::TruncatedSeries(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {
  if (vars < 1) throw DomainError("series need at least one variable");
  if (max_degree < 0) throw DomainError("truncation degree must be nonnegative");
}

TruncatedSeries TruncatedSeries::variable(int vars, int max_degree, int index) {
  TruncatedSeries s(vars, max_degree);
  if (index < 0 || index >= vars) throw DomainError("variable index out of range");
  Exponent n(vars, 0);
  n[index] = 1;
  s.add_term(n, LaurentPoly(1));
  return s;
}

TruncatedSeries TruncatedSeries::constant(int vars, int max_degree, const LaurentPoly& c) {
  TruncatedSeries s(vars, max_degree);
  s.add_term(Exponent(vars, 0), c);
  return s;
}

LaurentPoly TruncatedSeries::at(const Exponent& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TruncatedSeries::add_term(const Exponent& n, const LaurentPoly& c) {
  if (static_cast<int>(n.size()) != vars_) throw DomainError("exponent length differs from variable count");
  if (c.is_zero() || total_degree(n) > max_degree_) return;
  auto [it, fresh] = terms_.try_emplace(n, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TruncatedSeries::set_term(const Exponent& n, const LaurentPoly& c) {
  terms_.erase(n);
  add_term(n, c);
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries out(vars_, max_degree_);
  for (const auto& [n, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), n, c.shifted(k));
  return out;
}

TruncatedSeries TruncatedSeries::embedded(int vars, int offset) const {
  if (offset < 0 || offset + vars_ > vars) throw DomainError("embedding does not fit");
  TruncatedSeries out(vars, max_degree_);
  for (const auto& [n, c] : terms_) {
    Exponent wide(vars, 0);
    std::copy(n.begin(), n.end(), wide.begin() + offset);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

namespace {

void require_same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.vars() != b.vars() || a.max_degree() != b.max_degree())
    throw DomainError("series operands differ in variable count or truncation degree");
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_shape(a, b);
  TruncatedSeries out = a;
  for (const auto& [n, c] : b.terms_) out.add_term(n, c);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_shape(a, b);
  TruncatedSeries out = a;
  for (const auto& [n, c] : b.terms_) out.add_term(n, -c);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_shape(a, b);
  TruncatedSeries out(a.vars_, a.max_degree_);
  std::vector<std::pair<int, const std::pair<const Exponent, LaurentPoly>*>> right;
  for (const auto& term : b.terms_) right.emplace_back(total_degree(term.first), &term);
  Exponent n(a.vars_);
  for (const auto& [na, ca] : a.terms_) {
    const int da = total_degree(na);
    for (const auto& [db, term] : right) {
      if (da + db > a.max_degree_) continue;
      for (int i = 0; i < a.vars_; ++i) n[i] = na[i] + term->first[i];
      out.add_term(n, ca * term->second);
    }
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries geometric_inverse(const TruncatedSeries& u) {
  if (!u.at(Exponent(u.vars(), 0)).is_zero())
    throw DomainError("geometric series of a term with nonzero constant part");
  TruncatedSeries sum(u.vars(), u.max_degree());
  TruncatedSeries power = u;
  // u has order >= 1, so u^j vanishes once j exceeds D.
  for (int j = 1; j <= u.max_degree() && !power.terms().empty(); ++j) {
    sum = sum + power;
    power = power * u;
  }
  return sum;
}

namespace {

TruncatedSeries one_plus_geometric(const TruncatedSeries& u) {
  return TruncatedSeries::constant(u.vars(), u.max_degree(), LaurentPoly(1)) + geometric_inverse(u);
}

// Replaces lower-degree coefficients frozen by earlier rounds and keeps
// degree d from `next`.
void freeze_degree(TruncatedSeries& current, const TruncatedSeries& next, int d) {
  for (const auto& [n, c] : next.terms())
    if (total_degree(n) == d) current.set_term(n, c);
}

void assert_counts(const TruncatedSeries& s, const std::string& what) {
  for (const auto& [n, c] : s.terms()) {
    if (total_degree(n) == 0) throw std::runtime_error(what + " has a constant term");
    if (!c.is_nonnegative_polynomial())
      throw std::runtime_error(what + " has coefficient " + c.to_string() +
                               " which is not a polynomial in t with nonnegative coefficients");
  }
}

}  // namespace

TruncatedSeries f_step(const TruncatedSeries& f) {
  if (f.vars() != 1) throw DomainError("f is a series in one variable");
  const auto x = TruncatedSeries::variable(1, f.max_degree(), 0);
  return x + f * f * one_plus_geometric(f.shifted(1));
}

TruncatedSeries solve_f(int max_degree) {
  if (max_degree < 1) throw DomainError("solve_f needs D >= 1");
  TruncatedSeries f(1, max_degree);
  for (int d = 1; d <= max_degree; ++d) freeze_degree(f, f_step(f), d);
  assert_counts(f, "f");
  return f;
}

ClosedFormCheck check_f_closed_form(const TruncatedSeries& f) {
  const int D = f.max_degree();
  const auto x = TruncatedSeries::variable(1, D, 0);
  const auto one = TruncatedSeries::constant(1, D, LaurentPoly(1));
  const LaurentPoly two_one_plus_t = LaurentPoly(2) + LaurentPoly::monomial(1, 2);
  const auto base = TruncatedSeries::constant(1, D, two_one_plus_t) * f - one - x.shifted(1);
  const auto lhs = base * base;
  TruncatedSeries rhs = one;
  rhs.add_term({1}, LaurentPoly(-4) + LaurentPoly::monomial(1, -2));
  rhs.add_term({2}, LaurentPoly::monomial(2, 1));
  ClosedFormCheck result;
  for (int d = 0; d <= D; ++d) {
    const Exponent n{d};
    if (lhs.at(n) != rhs.at(n)) {
      result.holds = false;
      result.first_mismatch = n;
      result.expected = rhs.at(n);
      result.observed = lhs.at(n);
      break;
    }
  }
  return result;
}

ClosedFormCheck check_f_closed_form(int max_degree) { return check_f_closed_form(solve_f(max_degree)); }

TruncatedSeries F_step(const Tree& t, const TruncatedSeries& F) {
  if (t.is_leaf()) return f_step(F);
  const int r = t.leaf_count();
  const int D = F.max_degree();
  if (F.vars() != r) throw DomainError("series variable count differs from the tree's leaf count");
  const int p = dim_tree(t);

  auto product = TruncatedSeries::constant(r, D, LaurentPoly(1));
  int offset = 0;
  for (const auto& child : t.children()) {
    const auto Fi = solve_F(child, D).embedded(r, offset);
    product = product * one_plus_geometric(Fi.shifted(1 - dim_tree(child)));
    offset += child.leaf_count();
  }
  const auto one = TruncatedSeries::constant(r, D, LaurentPoly(1));
  const auto vertical = (F * F * one_plus_geometric(F.shifted(1 - p))).shifted(-p);
  const auto horizontal = (product - one).shifted(p - 1);
  return vertical + horizontal;
}

TruncatedSeries solve_F(const Tree& t, int max_degree) {
  if (max_degree < 1) throw DomainError("solve_F needs D >= 1");
  if (t.is_leaf()) return solve_f(max_degree);
  static ConcurrentMemo<std::pair<std::string, int>, TruncatedSeries> memo;
  return memo.get_or_compute({t.to_text(), max_degree}, [&] {
    TruncatedSeries F(t.leaf_count(), max_degree);
    for (int d = 1; d <= max_degree; ++d) freeze_degree(F, F_step(t, F), d);
    assert_counts(F, "F_" + t.to_text());
    return F;
  });
}

TruncatedSeries eval_t_minus1(const TruncatedSeries& s) {
  TruncatedSeries out(s.vars(), s.max_degree());
  for (const auto& [n, c] : s.terms()) out.add_term(n, LaurentPoly(c.at_minus_one()));
  return out;
}

BigInt coefficient(const TruncatedSeries& s, int m, const Exponent& n) {
  if (static_cast<int>(n.size()) != s.vars()) throw DomainError("exponent length differs from variable count");
  if (total_degree(n) > s.max_degree()) throw DomainError("requested degree exceeds the truncation degree");
  return s.at(n).coefficient(m);
}

nlohmann::ordered_json series_to_json(const TruncatedSeries& s) {
  nlohmann::ordered_json doc;
  doc["vars"] = s.vars();
  doc["max_degree"] = s.max_degree();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [n, c] : s.terms()) {
    nlohmann::ordered_json poly = nlohmann::ordered_json::array();
    for (const auto& [e, k] : c.terms()) poly.push_back({e, k.str()});
    terms.push_back({{"n", n}, {"t_poly", std::move(poly)}});
  }
  doc["terms"] = std::move(terms);
  return doc;
}

}  // namespace twoassoc
