#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "twoassoc/laurent.hpp"
#include "twoassoc/tree.hpp"

namespace twoassoc {

using Exponent = std::vector<int>;

/// Power series in x_1..x_r truncated above total degree D, with Laurent
/// polynomial coefficients in t. Terms are keyed by exponent vector and kept
/// free of zeros and of anything above degree D.
class TruncatedSeries {
 public:
  TruncatedSeries(int vars, int max_degree);

  static TruncatedSeries variable(int vars, int max_degree, int index);
  static TruncatedSeries constant(int vars, int max_degree, const LaurentPoly& c);

  int vars() const { return vars_; }
  int max_degree() const { return max_degree_; }
  const std::map<Exponent, LaurentPoly>& terms() const { return terms_; }

  LaurentPoly at(const Exponent& n) const;
  /// Adds c x^n; silently drops terms above the truncation degree.
  void add_term(const Exponent& n, const LaurentPoly& c);
  void set_term(const Exponent& n, const LaurentPoly& c);

  /// Multiplication of every coefficient by t^k.
  TruncatedSeries shifted(int k) const;

  /// Copy placed into a wider variable set, variable i going to offset + i.
  TruncatedSeries embedded(int vars, int offset) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int vars_;
  int max_degree_;
  std::map<Exponent, LaurentPoly> terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
/// u + u^2 + ... up to the truncation degree; u must have no constant term.
TruncatedSeries geometric_inverse(const TruncatedSeries& u);

/// One application of f -> x + f^2 (1 + sum_j (t f)^j).
TruncatedSeries f_step(const TruncatedSeries& f);
/// Fixed point of f_step with linear term x, one variable, degree <= D.
TruncatedSeries solve_f(int max_degree);

struct ClosedFormCheck {
  bool holds = true;
  std::optional<Exponent> first_mismatch;
  LaurentPoly expected;
  LaurentPoly observed;
};
/// Checks (2(1+t)f - 1 - tx)^2 = 1 - 4x - 2tx + t^2x^2 up to f's truncation.
ClosedFormCheck check_f_closed_form(const TruncatedSeries& f);
ClosedFormCheck check_f_closed_form(int max_degree);

/// One application of the F_T equation, with children taken from solve_F.
TruncatedSeries F_step(const Tree& t, const TruncatedSeries& F);
/// Fixed point for F_T in leaf_count(T) variables. Memoized per (T, D).
/// Throws std::runtime_error if a coefficient is not a nonnegative
/// polynomial in t, or if a constant term appears.
TruncatedSeries solve_F(const Tree& t, int max_degree);

TruncatedSeries eval_t_minus1(const TruncatedSeries& s);

/// t^m coefficient of x^n. Throws DomainError when |n| > D or the length of
/// n differs from the variable count.
BigInt coefficient(const TruncatedSeries& s, int m, const Exponent& n);

/// {"vars", "max_degree", "terms": [{"n", "t_poly": [[exp, "coeff"]]}]}
nlohmann::ordered_json series_to_json(const TruncatedSeries& s);

int total_degree(const Exponent& n);

}  // namespace twoassoc
