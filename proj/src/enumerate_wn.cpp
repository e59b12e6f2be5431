#include "twoassoc/enumerate_wn.hpp"

#include <algorithm>
#include <map>

#include "twoassoc/associahedron.hpp"

namespace twoassoc {

int top_rank(const NVector& n) { return std::max(0, total_points(n) + static_cast<int>(n.size()) - 3); }

namespace {

std::vector<Extent> line_extents(int ni) {
  std::vector<Extent> out;
  for (int a = 1; a <= ni; ++a)
    for (int b = a; b <= ni; ++b) out.push_back(Extent::points(a, b));
  for (int g = 0; g <= ni; ++g) out.push_back(Extent::gap(g));
  return out;
}

// Optional 2-brackets over the brackets of one tree: at least one point,
// neither a point singleton nor the maximal 2-bracket.
std::vector<TwoBracket> candidates(const NVector& n, const Bracketing& b) {
  const auto top = TwoBracket::maximal(n);
  std::vector<TwoBracket> out;
  for (const auto& B : b.with_singletons()) {
    std::vector<std::vector<Extent>> options;
    for (int i = B.lo; i <= B.hi; ++i) options.push_back(line_extents(n[i - 1]));
    std::vector<std::size_t> idx(options.size(), 0);
    while (true) {
      TwoBracket x{B, {}};
      for (std::size_t i = 0; i < options.size(); ++i) x.extents.push_back(options[i][idx[i]]);
      if (x.point_count() > 0 && !x.is_point_singleton() && x != top) out.push_back(std::move(x));
      int i = static_cast<int>(options.size()) - 1;
      while (i >= 0 && ++idx[i] == options[i].size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
  // Big bubbles first so that crossings prune early.
  std::sort(out.begin(), out.end(), [](const TwoBracket& x, const TwoBracket& y) {
    if (x.point_count() != y.point_count()) return x.point_count() > y.point_count();
    if (x.B.size() != y.B.size()) return x.B.size() > y.B.size();
    return x < y;
  });
  return out;
}

}  // namespace

std::vector<TwoBracketing> enumerate_two_bracketings(const NVector& n, const EnumerationLimits& limits) {
  require_valid_n(n);
  const int r = static_cast<int>(n.size());
  const auto forced = top_element(n).two_brackets;
  std::vector<TwoBracketing> out;
  for (const auto& tree : all_trees(r)) {
    const auto b = Bracketing::from_tree(tree);
    const auto cands = candidates(n, b);
    const int C = static_cast<int>(cands.size());
    std::vector<std::vector<char>> ok(C, std::vector<char>(C, 0));
    for (int i = 0; i < C; ++i)
      for (int j = 0; j < C; ++j) ok[i][j] = compatible(cands[i], cands[j]);

    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int i) -> void {
      if (i == C) {
        std::vector<TwoBracket> xs = forced;
        for (int c : chosen) xs.push_back(cands[c]);
        TwoBracketing tb(n, b, std::move(xs));
        if (validate_two_bracketing(tb)) {
          if (out.size() >= limits.max_elements)
            throw SizeCapExceeded("W" + n_to_text(n) + " has more than " + std::to_string(limits.max_elements) +
                                  " elements");
          out.push_back(std::move(tb));
        }
        return;
      }
      if (std::all_of(chosen.begin(), chosen.end(), [&](int c) { return ok[i][c]; })) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
      self(self, i + 1);
    };
    dfs(dfs, 0);
  }
  return out;
}

WnPoset enumerate_Wn(const NVector& n, const EnumerationLimits& limits) {
  auto raw = enumerate_two_bracketings(n, limits);

  std::map<Interval, int> bracket_ids;
  std::map<TwoBracket, int> two_ids;
  for (const auto& tb : raw) {
    for (const auto& B : tb.bracketing.brackets()) bracket_ids.try_emplace(B, 0);
    for (const auto& x : tb.two_brackets) two_ids.try_emplace(x, 0);
  }
  int next = 0;
  for (auto& [B, id] : bracket_ids) id = next++;
  for (auto& [x, id] : two_ids) id = next++;

  std::vector<Bitset> features;
  std::vector<std::string> labels;
  for (const auto& tb : raw) {
    Bitset f(next);
    for (const auto& B : tb.bracketing.brackets()) f.set(bracket_ids.at(B));
    for (const auto& x : tb.two_brackets) f.set(two_ids.at(x));
    features.push_back(std::move(f));
    labels.push_back(tb.label());
  }
  const auto rough = RankedPoset::from_reverse_inclusion(features, std::move(labels));
  const auto order = rough.rank_label_order();

  WnPoset w;
  w.n = n;
  w.poset = rough.canonicalized();
  for (int id : order) {
    w.pi_labels.push_back(raw[id].bracketing.to_tree().to_text());
    w.elements.push_back(std::move(raw[id]));
  }

  const auto tops = w.poset.maximal_elements();
  if (tops.size() != 1)
    throw GradingError("W" + n_to_text(n) + " has " + std::to_string(tops.size()) + " maximal elements");
  if (w.poset.rank(tops[0]) != top_rank(n))
    throw GradingError("top of W" + n_to_text(n) + " sits at rank " + std::to_string(w.poset.rank(tops[0])) +
                       ", expected " + std::to_string(top_rank(n)));
  if (!(w.elements[tops[0]] == top_element(n))) throw GradingError("maximum of W" + n_to_text(n) + " is not the top element");
  if (!is_graded(w.poset)) throw GradingError("W" + n_to_text(n) + " is not graded");
  return w;
}

RankedPoset completed(const WnPoset& w) { return complete_with_min(w.poset, -1); }

}  // namespace twoassoc
