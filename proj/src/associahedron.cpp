#include "twoassoc/associahedron.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace twoassoc {

namespace {

void compositions(int total, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= total - parts + 1; ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Tree> all_trees(int r) {
  if (r < 1) throw DomainError("K_r needs r >= 1");
  if (r == 1) return {Tree::leaf()};
  static std::mutex cache_mutex;
  static std::map<int, std::vector<Tree>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  std::vector<Tree> out;
  for (int k = 2; k <= r; ++k) {
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    compositions(r, k, prefix, comps);
    for (const auto& comp : comps) {
      std::vector<std::vector<Tree>> options;
      for (int q : comp) options.push_back(all_trees(q));
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::vector<Tree> kids;
        for (int i = 0; i < k; ++i) kids.push_back(options[i][idx[i]]);
        out.push_back(Tree::node(std::move(kids)));
        int i = k - 1;
        while (i >= 0 && ++idx[i] == options[i].size()) idx[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(r, out);
  return out;
}

RankedPoset enumerate_Kr(int r) {
  if (r < 1) throw DomainError("K_r needs r >= 1");
  // Dense ids for the brackets of (1..r).
  auto bracket_id = [r](const Interval& b) { return (b.lo - 1) * r + (b.hi - 1); };
  std::vector<Bitset> features;
  std::vector<std::string> labels;
  for (const auto& t : all_trees(r)) {
    Bitset f(r * r);
    const auto bracketing = Bracketing::from_tree(t);
    for (const auto& b : bracketing.brackets()) f.set(bracket_id(b));
    features.push_back(std::move(f));
    labels.push_back(t.to_text());
  }
  return RankedPoset::from_reverse_inclusion(features, std::move(labels)).canonicalized();
}

CountKMemo& count_K_memo() {
  static CountKMemo memo;
  return memo;
}

namespace {

// Ways to split P dimensions and R leaves among k ordered subtrees.
BigInt split_count(int k, int P, int R) {
  static ConcurrentMemo<std::tuple<int, int, int>, BigInt> memo;
  if (k == 0) return (P == 0 && R == 0) ? 1 : 0;
  if (P < 0 || R < k) return 0;
  return memo.get_or_compute({k, P, R}, [&] {
    BigInt total = 0;
    for (int p = 0; p <= P; ++p)
      for (int q = 1; q <= R - k + 1; ++q) {
        BigInt head = count_K(p, q);
        if (head != 0) total += head * split_count(k - 1, P - p, R - q);
      }
    return total;
  });
}

}  // namespace

BigInt count_K(int m, int r) {
  if (m < 0 || r < 1) return 0;
  if (r == 1) return m == 0 ? 1 : 0;
  return count_K_memo().get_or_compute({m, r}, [&] {
    BigInt total = 0;
    for (int k = 2; k <= std::min(r, m + 2); ++k) total += split_count(k, m - k + 2, r);
    return total;
  });
}

}  // namespace twoassoc
