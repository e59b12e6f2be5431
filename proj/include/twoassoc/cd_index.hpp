#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "twoassoc/poset.hpp"

namespace twoassoc {

class NonEulerianError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flag f- or h-vector of a bounded graded poset of rank `rank_span`
/// (rank of 1̂ minus rank of 0̂). Keys are bitmasks over {1, ..., rank_span-1};
/// bit i-1 set means relative rank i is in the subset.
struct FlagVector {
  int rank_span = 0;
  std::map<unsigned, BigInt> entries;

  const BigInt& at(unsigned subset) const { return entries.at(subset); }
};

/// Words over {a, b} (or {c, d}) with integer coefficients.
using WordPolynomial = std::map<std::string, BigInt>;

/// Noncommutative polynomial in c (weight 1) and d (weight 2).
class CdPolynomial {
 public:
  CdPolynomial() = default;
  explicit CdPolynomial(WordPolynomial terms);

  const WordPolynomial& terms() const { return terms_; }
  BigInt coefficient(const std::string& word) const;
  /// Common weight of all words; -1 for the zero polynomial.
  int weight() const;

  /// "c^2 + 3d"; words print with run-length exponents in lexicographic order.
  std::string to_string() const;

  /// Expansion with c = a + b, d = ab + ba.
  WordPolynomial to_ab() const;

  friend bool operator==(const CdPolynomial&, const CdPolynomial&) = default;

 private:
  WordPolynomial terms_;
};

int word_weight(const std::string& cd_word);

FlagVector flag_f_vector(const RankedPoset& p);
FlagVector flag_h_vector(const FlagVector& f);
WordPolynomial ab_index(const FlagVector& h);

struct CdRewrite {
  CdPolynomial cd;
  WordPolynomial remainder;  // empty iff the ab-polynomial is a cd-polynomial
};

/// Greedy rewrite: the lexicographically largest ab-word (b > a) of any
/// cd-monomial's expansion is its image under c -> b, d -> ba, so peeling off
/// the largest remaining word either succeeds or exposes a remainder.
CdRewrite rewrite_ab_to_cd(const WordPolynomial& ab);

/// Requires a bounded, graded poset. Throws NonEulerianError when the
/// ab-index does not rewrite in c and d.
CdPolynomial cd_index(const RankedPoset& p);

}  // namespace twoassoc
