#include "twoassoc/laurent.hpp"

#include <stdexcept>

namespace twoassoc {

LaurentPoly::LaurentPoly(const BigInt& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(exponent, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

BigInt LaurentPoly::at_minus_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += (e % 2 == 0) ? c : BigInt(-c);
  return sum;
}

bool LaurentPoly::is_nonnegative_polynomial() const {
  for (const auto& [e, c] : terms_)
    if (e < 0 || c < 0) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string var = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    if (var.empty()) out += mag.str();
    else if (mag == 1) out += var;
    else out += mag.str() + var;
  }
  return out;
}

}  // namespace twoassoc
