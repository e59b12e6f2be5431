#pragma once

#include <map>
#include <string>

#include "twoassoc/bigint.hpp"

namespace twoassoc {

/// Finite Laurent polynomial in t with big-integer coefficients. Zero
/// coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const BigInt& constant);  // NOLINT: implicit scalar lift
  static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  BigInt at_minus_one() const;
  /// No negative exponents and no negative coefficients.
  bool is_nonnegative_polynomial() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// "5 + 5t + t^2", "t^-1 - 2"
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, const BigInt& coeff);
  std::map<int, BigInt> terms_;
};

}  // namespace twoassoc
