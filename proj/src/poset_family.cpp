#include "twoassoc/poset_family.hpp"

#include <functional>
#include <string>

namespace twoassoc {

namespace {

void level_shapes(int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int size = 1; size <= remaining; ++size) {
    current.push_back(size);
    level_shapes(remaining - size, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RankedPoset> bounded_graded_posets(int max_elements, int min_rank) {
  std::vector<RankedPoset> out;
  if (max_elements >= 1) out.emplace_back(std::vector<int>{min_rank}, std::vector<Cover>{});
  if (max_elements < 2) return out;

  std::vector<std::vector<int>> shapes;
  std::vector<int> current;
  level_shapes(max_elements - 2, current, shapes);

  for (const auto& shape : shapes) {
    // Element ids: 0 is the minimum, then levels in order, then the maximum.
    std::vector<int> ranks{min_rank};
    std::vector<std::vector<int>> levels;
    int next_id = 1;
    for (std::size_t l = 0; l < shape.size(); ++l) {
      levels.emplace_back();
      for (int i = 0; i < shape[l]; ++i) {
        levels.back().push_back(next_id++);
        ranks.push_back(min_rank + 1 + static_cast<int>(l));
      }
    }
    const int top = next_id;
    ranks.push_back(min_rank + 1 + static_cast<int>(shape.size()));

    std::vector<Cover> fixed;
    if (levels.empty()) {
      fixed.emplace_back(0, top);
    } else {
      for (int x : levels.front()) fixed.emplace_back(0, x);
      for (int x : levels.back()) fixed.emplace_back(x, top);
    }

    // Choose a bipartite cover set between each pair of adjacent levels with
    // no isolated vertex on either side.
    std::function<void(std::size_t, std::vector<Cover>&)> choose = [&](std::size_t l, std::vector<Cover>& covers) {
      if (l + 1 >= levels.size()) {
        out.emplace_back(ranks, covers);
        return;
      }
      const auto& lo = levels[l];
      const auto& hi = levels[l + 1];
      const std::size_t edges = lo.size() * hi.size();
      for (unsigned mask = 1; mask < (1u << edges); ++mask) {
        std::vector<bool> lo_hit(lo.size()), hi_hit(hi.size());
        std::vector<Cover> added;
        for (std::size_t e = 0; e < edges; ++e) {
          if (!(mask & (1u << e))) continue;
          lo_hit[e / hi.size()] = true;
          hi_hit[e % hi.size()] = true;
          added.emplace_back(lo[e / hi.size()], hi[e % hi.size()]);
        }
        bool ok = true;
        for (bool b : lo_hit) ok = ok && b;
        for (bool b : hi_hit) ok = ok && b;
        if (!ok) continue;
        covers.insert(covers.end(), added.begin(), added.end());
        choose(l + 1, covers);
        covers.resize(covers.size() - added.size());
      }
    };
    std::vector<Cover> covers = fixed;
    choose(0, covers);
  }
  return out;
}

}  // namespace twoassoc
