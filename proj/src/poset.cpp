#include "twoassoc/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace twoassoc {

namespace {

std::string pair_text(int x, int y) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ")";
  return os.str();
}

// Ids sorted so that x < y in the order implies x comes first.
std::vector<int> linear_extension(const std::vector<Bitset>& above) {
  std::vector<int> ids(above.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::size_t> sizes(above.size());
  for (std::size_t i = 0; i < above.size(); ++i) sizes[i] = above[i].count();
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
  return ids;
}

}  // namespace

RankedPoset::RankedPoset(std::vector<int> ranks, std::vector<Cover> covers,
                         std::vector<std::string> labels)
    : rank_(std::move(ranks)), label_(std::move(labels)), covers_(std::move(covers)) {
  const int n = size();
  if (label_.empty()) {
    label_.reserve(n);
    for (int i = 0; i < n; ++i) label_.push_back(std::to_string(i));
  }
  if (static_cast<int>(label_.size()) != n) throw DomainError("label count does not match element count");
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  upper_.assign(n, {});
  lower_.assign(n, {});
  for (auto [x, y] : covers_) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw DomainError("cover " + pair_text(x, y) + " out of range");
    if (rank_[y] != rank_[x] + 1)
      throw GradingError("cover " + pair_text(x, y) + " does not raise rank by one");
    upper_[x].push_back(y);
    lower_[y].push_back(x);
  }
  build_closure();
}

void RankedPoset::build_closure() {
  const int n = size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Covers raise rank, so rank order is a linear extension.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
  up_.assign(n, Bitset(n));
  down_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    up_[x].set(x);
    for (int y : upper_[x]) up_[x] |= up_[y];
  }
  for (int x : order) {
    down_[x].set(x);
    for (int z : lower_[x]) down_[x] |= down_[z];
  }
  even_ = Bitset(n);
  for (int x = 0; x < n; ++x)
    if (rank_[x] % 2 == 0) even_.set(x);
}

RankedPoset RankedPoset::from_strict_order(const std::vector<Bitset>& above,
                                           std::vector<std::string> labels, int base_rank) {
  const int n = static_cast<int>(above.size());
  for (int x = 0; x < n; ++x) {
    if (above[x].test(x)) throw DomainError("strict order is reflexive at " + std::to_string(x));
    bool antisymmetric = true;
    above[x].for_each([&](int y) {
      if (above[y].test(x)) antisymmetric = false;
    });
    if (!antisymmetric) throw DomainError("strict order has a cycle through " + std::to_string(x));
  }
  std::vector<Cover> covers;
  std::vector<std::vector<int>> lower(n);
  for (int x = 0; x < n; ++x) {
    Bitset direct = above[x];
    above[x].for_each([&](int y) { direct -= above[y]; });
    direct.for_each([&](int y) {
      covers.emplace_back(x, y);
      lower[y].push_back(x);
    });
  }
  std::vector<int> ranks(n, base_rank);
  for (int y : linear_extension(above))
    for (int x : lower[y]) ranks[y] = std::max(ranks[y], ranks[x] + 1);
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

RankedPoset RankedPoset::from_reverse_inclusion(const std::vector<Bitset>& features,
                                                std::vector<std::string> labels, int base_rank) {
  const int n = static_cast<int>(features.size());
  std::vector<Bitset> above(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (features[y].is_subset_of(features[x])) {
        if (features[x].is_subset_of(features[y]))
          throw DomainError("duplicate elements " + pair_text(x, y));
        above[x].set(y);
      }
    }
  }
  return from_strict_order(above, std::move(labels), base_rank);
}

Bitset RankedPoset::interval(int x, int y) const {
  if (!leq(x, y)) throw DomainError("interval " + pair_text(x, y) + " is empty: x is not below y");
  return up_[x] & down_[y];
}

std::vector<int> RankedPoset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> RankedPoset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

std::optional<int> RankedPoset::minimum() const {
  auto m = minimal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::optional<int> RankedPoset::maximum() const {
  auto m = maximal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::optional<int> RankedPoset::find_label(const std::string& label) const {
  auto it = std::find(label_.begin(), label_.end(), label);
  if (it == label_.end()) return std::nullopt;
  return static_cast<int>(it - label_.begin());
}

std::vector<int> RankedPoset::rank_label_order() const {
  std::vector<int> ids(size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (rank_[a] != rank_[b]) return rank_[a] < rank_[b];
    return label_[a] < label_[b];
  });
  return ids;
}

RankedPoset RankedPoset::canonicalized() const {
  auto order = rank_label_order();
  std::vector<int> where(size());
  for (int i = 0; i < size(); ++i) where[order[i]] = i;
  std::vector<int> ranks(size());
  std::vector<std::string> labels(size());
  for (int i = 0; i < size(); ++i) {
    ranks[i] = rank_[order[i]];
    labels[i] = label_[order[i]];
  }
  std::vector<Cover> covers;
  covers.reserve(covers_.size());
  for (auto [x, y] : covers_) covers.emplace_back(where[x], where[y]);
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

long long alternating_sum(const RankedPoset& p, int x, int y) {
  if (!p.leq(x, y)) throw DomainError("alternating sum needs x <= y, got " + pair_text(x, y));
  auto total = static_cast<long long>(intersect_count(p.up(x), p.down(y)));
  auto even = static_cast<long long>(intersect_count(p.up(x), p.down(y), p.even_ranked()));
  return 2 * even - total;
}

long long alternating_sum(const RankedPoset& p) {
  auto even = static_cast<long long>(p.even_ranked().count());
  return 2 * even - p.size();
}

bool is_balanced(const RankedPoset& p, int x, int y) { return alternating_sum(p, x, y) == 0; }

bool is_graded(const RankedPoset& p) {
  const int n = p.size();
  // Topological order from down-set sizes, independent of the stored ranks.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n);
  for (int x = 0; x < n; ++x) below[x] = p.down(x).count();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });

  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> shortest(n), longest(n);
  for (int x = 0; x < n; ++x) {
    std::fill(shortest.begin(), shortest.end(), kUnset);
    std::fill(longest.begin(), longest.end(), -1);
    shortest[x] = longest[x] = 0;
    for (int z : order) {
      if (shortest[z] == kUnset) continue;
      for (int w : p.upper_covers(z)) {
        shortest[w] = std::min(shortest[w], shortest[z] + 1);
        longest[w] = std::max(longest[w], longest[z] + 1);
      }
    }
    for (int y = 0; y < n; ++y)
      if (shortest[y] != kUnset && shortest[y] != longest[y]) return false;
  }
  return true;
}

EulerianReport verify_eulerian(const RankedPoset& p) {
  EulerianReport report;
  report.graded = is_graded(p);
  for (int x = 0; x < p.size(); ++x) {
    p.up(x).for_each([&](int y) {
      if (y == x) return;
      ++report.intervals_checked;
      if (alternating_sum(p, x, y) != 0) report.unbalanced.emplace_back(x, y);
    });
  }
  return report;
}

std::vector<Cover> diamond_violations(const RankedPoset& p) {
  std::vector<Cover> out;
  for (int x = 0; x < p.size(); ++x) {
    p.up(x).for_each([&](int y) {
      if (p.rank(y) - p.rank(x) != 2) return;
      if (intersect_count(p.up(x), p.down(y)) != 4) out.emplace_back(x, y);
    });
  }
  return out;
}

long long MobiusTable::operator()(int x, int y) const {
  if (!poset_.leq(x, y)) throw DomainError("mobius needs x <= y, got " + pair_text(x, y));
  const auto key = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  long long value = compute(x, y);
  std::lock_guard lock(mutex_);
  memo_.try_emplace(key, value);
  return value;
}

long long MobiusTable::compute(int x, int y) const {
  if (x == y) return 1;
  long long sum = 0;
  poset_.interval(x, y).for_each([&](int z) {
    if (z != y) sum += (*this)(x, z);
  });
  return -sum;
}

long long mobius(const RankedPoset& p, int x, int y) { return MobiusTable(p)(x, y); }

std::vector<Cover> mobius_violations(const RankedPoset& p) {
  MobiusTable mu(p);
  std::vector<Cover> out;
  for (int x = 0; x < p.size(); ++x) {
    // Rank order keeps the recursion shallow: every strict lower bound of y
    // in [x, y] is already memoized.
    std::vector<int> ys = p.up(x).to_vector();
    std::stable_sort(ys.begin(), ys.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
    for (int y : ys) {
      long long expected = (p.rank(y) - p.rank(x)) % 2 == 0 ? 1 : -1;
      if (mu(x, y) != expected) out.emplace_back(x, y);
    }
  }
  return out;
}

RankedPoset complete_with_min(const RankedPoset& p, int min_rank, const std::string& label) {
  for (int x : p.minimal_elements())
    if (min_rank >= p.rank(x))
      throw DomainError("completion rank " + std::to_string(min_rank) +
                        " is not below minimal element of rank " + std::to_string(p.rank(x)));
  std::vector<int> ranks{min_rank};
  ranks.insert(ranks.end(), p.ranks().begin(), p.ranks().end());
  std::vector<std::string> labels{label};
  labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  std::vector<Cover> covers;
  for (auto [x, y] : p.covers()) covers.emplace_back(x + 1, y + 1);
  for (int x : p.minimal_elements()) covers.emplace_back(0, x + 1);
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

RankedPoset complete_with_max(const RankedPoset& p, int max_rank, const std::string& label) {
  for (int x : p.maximal_elements())
    if (max_rank <= p.rank(x))
      throw DomainError("completion rank " + std::to_string(max_rank) +
                        " is not above maximal element of rank " + std::to_string(p.rank(x)));
  std::vector<int> ranks = p.ranks();
  ranks.push_back(max_rank);
  std::vector<std::string> labels = p.labels();
  labels.push_back(label);
  std::vector<Cover> covers = p.covers();
  const int top = p.size();
  for (int x : p.maximal_elements()) covers.emplace_back(x, top);
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

RankedPoset reduced_product(const RankedPoset& p, const RankedPoset& q) {
  auto pmin = p.minimum(), pmax = p.maximum(), qmin = q.minimum(), qmax = q.maximum();
  if (!pmin || !pmax || !qmin || !qmax)
    throw DomainError("reduced product needs factors with unique minimum and maximum");

  std::vector<int> pids, qids;
  for (int x = 0; x < p.size(); ++x)
    if (x != *pmin) pids.push_back(x);
  for (int y = 0; y < q.size(); ++y)
    if (y != *qmin) qids.push_back(y);
  std::vector<int> pidx(p.size(), -1), qidx(q.size(), -1);
  for (std::size_t i = 0; i < pids.size(); ++i) pidx[pids[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < qids.size(); ++j) qidx[qids[j]] = static_cast<int>(j);
  const int width = static_cast<int>(qids.size());
  auto id = [&](int x, int y) { return 1 + pidx[x] * width + qidx[y]; };

  std::vector<int> ranks{p.rank(*pmin) + q.rank(*qmin) + 1};
  std::vector<std::string> labels{"(" + p.label(*pmin) + "," + q.label(*qmin) + ")"};
  for (int x : pids)
    for (int y : qids) {
      ranks.push_back(p.rank(x) + q.rank(y));
      labels.push_back("(" + p.label(x) + "," + q.label(y) + ")");
    }

  std::vector<Cover> covers;
  for (auto [x, x2] : p.covers()) {
    if (x == *pmin) continue;
    for (int y : qids) covers.emplace_back(id(x, y), id(x2, y));
  }
  for (auto [y, y2] : q.covers()) {
    if (y == *qmin) continue;
    for (int x : pids) covers.emplace_back(id(x, y), id(x, y2));
  }
  for (int a : p.upper_covers(*pmin))
    for (int b : q.upper_covers(*qmin)) covers.emplace_back(0, id(a, b));
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

RankedPoset reduced_product(const std::vector<RankedPoset>& factors) {
  if (factors.empty()) throw DomainError("reduced product of zero factors");
  RankedPoset acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = reduced_product(acc, factors[i]);
  return acc;
}

RankedPoset fiber_product(const std::vector<RankedPoset>& factors, const RankedPoset& base,
                          const std::vector<std::vector<int>>& maps) {
  const std::size_t k = factors.size();
  if (k == 0) throw DomainError("fiber product of zero factors");
  if (maps.size() != k) throw DomainError("fiber product needs one map per factor");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = factors[i];
    if (static_cast<int>(maps[i].size()) != f.size())
      throw DomainError("map " + std::to_string(i) + " does not cover its factor");
    for (int b : maps[i])
      if (b < 0 || b >= base.size()) throw DomainError("map " + std::to_string(i) + " leaves the base");
    for (auto [x, y] : f.covers())
      if (!base.leq(maps[i][x], maps[i][y]))
        throw DomainError("map " + std::to_string(i) + " is not order-preserving");
  }
  if (k == 1) return factors.front();

  std::vector<std::vector<std::vector<int>>> fibers(k, std::vector<std::vector<int>>(base.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (int x = 0; x < factors[i].size(); ++x) fibers[i][maps[i][x]].push_back(x);

  // Tuples in lexicographic order of component ids.
  std::vector<std::vector<int>> tuples;
  std::vector<int> current(k);
  auto extend = [&](auto&& self, std::size_t i, int b) -> void {
    if (i == k) {
      tuples.push_back(current);
      return;
    }
    for (int x : fibers[i][b]) {
      current[i] = x;
      self(self, i + 1, b);
    }
  };
  for (int x = 0; x < factors[0].size(); ++x) {
    current[0] = x;
    extend(extend, 1, maps[0][x]);
  }

  const int n = static_cast<int>(tuples.size());
  std::vector<int> ranks(n);
  std::vector<std::string> labels(n);
  for (int t = 0; t < n; ++t) {
    int sum = 0;
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) {
      sum += factors[i].rank(tuples[t][i]);
      if (i) label += ",";
      label += factors[i].label(tuples[t][i]);
    }
    ranks[t] = sum - static_cast<int>(k - 1) * base.rank(maps[0][tuples[t][0]]);
    labels[t] = label + ")";
  }

  std::vector<Bitset> above(n, Bitset(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      bool le = true;
      for (std::size_t i = 0; i < k && le; ++i) le = factors[i].leq(tuples[s][i], tuples[t][i]);
      if (le) above[s].set(t);
    }
  std::vector<Cover> covers;
  for (int s = 0; s < n; ++s) {
    Bitset direct = above[s];
    above[s].for_each([&](int t) { direct -= above[t]; });
    direct.for_each([&](int t) { covers.emplace_back(s, t); });
  }
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

}  // namespace twoassoc
