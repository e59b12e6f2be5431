#include "twoassoc/cd_index.hpp"

#include <bit>

namespace twoassoc {

int word_weight(const std::string& cd_word) {
  int w = 0;
  for (char ch : cd_word) {
    if (ch == 'c') w += 1;
    else if (ch == 'd') w += 2;
    else throw DomainError(std::string("not a cd-word letter: ") + ch);
  }
  return w;
}

CdPolynomial::CdPolynomial(WordPolynomial terms) {
  for (auto& [word, coeff] : terms) {
    if (coeff == 0) continue;
    const int w = word_weight(word);
    if (!terms_.empty() && w != word_weight(terms_.begin()->first))
      throw DomainError("cd-polynomial is not homogeneous");
    terms_.emplace(word, coeff);
  }
}

BigInt CdPolynomial::coefficient(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int CdPolynomial::weight() const { return terms_.empty() ? -1 : word_weight(terms_.begin()->first); }

std::string CdPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : terms_) {
    BigInt magnitude = coeff < 0 ? BigInt(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < word.size();) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      monomial += word[i];
      if (j - i > 1) monomial += "^" + std::to_string(j - i);
      i = j;
    }
    if (monomial.empty()) out += magnitude.str();
    else if (magnitude == 1) out += monomial;
    else out += magnitude.str() + monomial;
  }
  return out;
}

namespace {

void expand_into(const std::string& cd_word, const BigInt& coeff, WordPolynomial& out) {
  std::vector<std::string> partial{""};
  for (char ch : cd_word) {
    std::vector<std::string> next;
    for (const auto& w : partial) {
      if (ch == 'c') {
        next.push_back(w + "a");
        next.push_back(w + "b");
      } else {
        next.push_back(w + "ab");
        next.push_back(w + "ba");
      }
    }
    partial = std::move(next);
  }
  for (const auto& w : partial) {
    auto& slot = out[w];
    slot += coeff;
    if (slot == 0) out.erase(w);
  }
}

}  // namespace

WordPolynomial CdPolynomial::to_ab() const {
  WordPolynomial out;
  for (const auto& [word, coeff] : terms_) expand_into(word, coeff, out);
  return out;
}

FlagVector flag_f_vector(const RankedPoset& p) {
  auto bottom = p.minimum();
  auto top = p.maximum();
  if (!bottom || !top) throw DomainError("flag vectors need a bounded poset");
  if (!is_graded(p)) throw DomainError("flag vectors need a graded poset");
  const int base = p.rank(*bottom);
  const int span = p.rank(*top) - base;
  if (span < 1) throw DomainError("flag vectors need rank span at least 1");

  std::vector<Bitset> level(span + 1, Bitset(p.size()));
  for (int x = 0; x < p.size(); ++x) level[p.rank(x) - base].set(x);

  FlagVector f;
  f.rank_span = span;
  // Depth-first over subsets by increasing top rank, sharing chain counts of
  // each prefix. prefix[x] counts chains from 0̂ through the prefix ending at x.
  auto extend = [&](auto&& self, unsigned mask, int last, const std::vector<BigInt>& prefix) -> void {
    BigInt total = 0;
    level[last].for_each([&](int x) { total += prefix[x]; });
    f.entries[mask] = total;
    for (int next = last + 1; next < span; ++next) {
      std::vector<BigInt> step(p.size());
      level[next].for_each([&](int y) {
        BigInt sum = 0;
        (p.down(y) & level[last]).for_each([&](int x) { sum += prefix[x]; });
        step[y] = sum;
      });
      self(self, mask | (1u << (next - 1)), next, step);
    }
  };
  std::vector<BigInt> start(p.size());
  start[*bottom] = 1;
  extend(extend, 0u, 0, start);
  return f;
}

FlagVector flag_h_vector(const FlagVector& f) {
  FlagVector h;
  h.rank_span = f.rank_span;
  const unsigned full = (f.rank_span >= 1) ? ((1u << (f.rank_span - 1)) - 1) : 0u;
  for (unsigned s = 0;; ++s) {
    if ((s & ~full) != 0) break;
    BigInt sum = 0;
    for (unsigned t = s;; t = (t - 1) & s) {
      int sign_bits = std::popcount(s & ~t);
      sum += (sign_bits % 2 == 0 ? 1 : -1) * f.at(t);
      if (t == 0) break;
    }
    h.entries[s] = sum;
    if (s == full) break;
  }
  return h;
}

WordPolynomial ab_index(const FlagVector& h) {
  WordPolynomial out;
  const int len = h.rank_span - 1;
  for (const auto& [mask, coeff] : h.entries) {
    if (coeff == 0) continue;
    std::string word(len, 'a');
    for (int i = 0; i < len; ++i)
      if (mask & (1u << i)) word[i] = 'b';
    out[word] += coeff;
  }
  return out;
}

CdRewrite rewrite_ab_to_cd(const WordPolynomial& ab) {
  WordPolynomial rest;
  for (const auto& [w, c] : ab)
    if (c != 0) rest[w] = c;
  WordPolynomial cd;
  while (!rest.empty()) {
    auto [word, coeff] = *rest.rbegin();
    std::string cd_word;
    bool decodable = true;
    for (std::size_t i = 0; i < word.size();) {
      if (word[i] != 'b') {
        decodable = false;
        break;
      }
      if (i + 1 < word.size() && word[i + 1] == 'a') {
        cd_word += 'd';
        i += 2;
      } else {
        cd_word += 'c';
        i += 1;
      }
    }
    if (!decodable) break;
    cd[cd_word] += coeff;
    expand_into(cd_word, -coeff, rest);
  }
  return CdRewrite{CdPolynomial(std::move(cd)), std::move(rest)};
}

CdPolynomial cd_index(const RankedPoset& p) {
  auto rewrite = rewrite_ab_to_cd(ab_index(flag_h_vector(flag_f_vector(p))));
  if (!rewrite.remainder.empty())
    throw NonEulerianError("ab-index leaves a remainder of " + std::to_string(rewrite.remainder.size()) +
                           " words after cd-rewriting; the poset is not Eulerian");
  return rewrite.cd;
}

}  // namespace twoassoc
