#include "twoassoc/count_w.hpp"

#include <algorithm>
#include <numeric>

#include "twoassoc/associahedron.hpp"
#include "twoassoc/enumerate_wn.hpp"
#include "twoassoc/poset.hpp"

namespace twoassoc {

CountWMemo& count_W_memo() {
  static CountWMemo memo;
  return memo;
}

namespace {

bool is_zero(const NVector& n) {
  return std::all_of(n.begin(), n.end(), [](int v) { return v == 0; });
}

void check_shape(const Tree& t, const NVector& n) {
  if (static_cast<int>(n.size()) != t.leaf_count())
    throw DomainError("n has " + std::to_string(n.size()) + " entries but the tree has " +
                      std::to_string(t.leaf_count()) + " leaves");
  for (int v : n)
    if (v < 0) throw DomainError("entries of n must be nonnegative");
}

// Calls f(Q) for every nonzero Q <= n componentwise.
template <class F>
void for_each_sub_vector(const NVector& n, F&& f) {
  NVector q(n.size(), 0);
  while (true) {
    if (!is_zero(q)) f(q);
    std::size_t i = 0;
    while (i < n.size() && q[i] == n[i]) q[i++] = 0;
    if (i == n.size()) return;
    ++q[i];
  }
}

NVector minus(const NVector& a, const NVector& b) {
  NVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Stacks of `a` nonzero pieces over t whose n-vectors sum to n and whose
// dimensions sum to M.
BigInt stacks(const Tree& t, int a, int M, const NVector& n) {
  if (a == 0) return (M == 0 && is_zero(n)) ? 1 : 0;
  if (M < 0 || total_points(n) < a) return 0;
  static ConcurrentMemo<std::tuple<std::string, int, int, NVector>, BigInt> memo;
  return memo.get_or_compute({t.to_text(), a, M, n}, [&] {
    BigInt total = 0;
    for_each_sub_vector(n, [&](const NVector& q) {
      const NVector rest = minus(n, q);
      if (total_points(rest) < a - 1) return;
      for (int m1 = 0; m1 <= M; ++m1) {
        BigInt w = count_W(t, m1, q);
        if (w != 0) total += w * stacks(t, a - 1, M - m1, rest);
      }
    });
    return total;
  });
}

std::vector<NVector> blocks_of(const Tree& t, const NVector& n) {
  std::vector<NVector> blocks;
  int offset = 0;
  for (const auto& c : t.children()) {
    blocks.emplace_back(n.begin() + offset, n.begin() + offset + c.leaf_count());
    offset += c.leaf_count();
  }
  return blocks;
}

// Side-by-side branch: block i carries a stack of a[i] pieces over child i,
// with total dimension M spread over the blocks.
BigInt side_by_side(const std::vector<Tree>& kids, const std::vector<NVector>& blocks, const std::vector<int>& a,
                    std::size_t i, int M) {
  if (i == kids.size()) return M == 0 ? 1 : 0;
  BigInt total = 0;
  for (int Mi = 0; Mi <= M; ++Mi) {
    BigInt here = stacks(kids[i], a[i], Mi, blocks[i]);
    if (here != 0) total += here * side_by_side(kids, blocks, a, i + 1, M - Mi);
  }
  return total;
}

}  // namespace

BigInt count_W(const Tree& t, int m, const NVector& n) {
  check_shape(t, n);
  if (m < 0 || is_zero(n)) return 0;
  if (t.is_leaf()) return count_K(m, n[0]);
  return count_W_memo().get_or_compute({t.to_text(), m, n}, [&] {
    const int p = dim_tree(t);
    BigInt total = 0;
    for (int a = 2; a <= total_points(n); ++a) total += stacks(t, a, m + (a - 1) * p - a + 2, n);

    const auto& kids = t.children();
    const int k = static_cast<int>(kids.size());
    const auto blocks = blocks_of(t, n);
    std::vector<int> ps;
    for (const auto& c : kids) ps.push_back(dim_tree(c));
    const int sum_p = std::accumulate(ps.begin(), ps.end(), 0);
    std::vector<int> a(k, 0);
    while (true) {
      std::size_t i = 0;
      while (i < a.size() && a[i] == total_points(blocks[i])) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
      int M = m - sum_p - k + 3;
      for (int j = 0; j < k; ++j) M += a[j] * (ps[j] - 1);
      if (M >= 0) total += side_by_side(kids, blocks, a, 0, M);
    }
    return total;
  });
}

int dim_2concat(const std::vector<int>& p, const std::vector<int>& a, const std::vector<std::vector<int>>& P) {
  const int k = static_cast<int>(p.size());
  if (k == 0 || a.size() != p.size() || P.size() != p.size())
    throw DomainError("dim_2concat needs one p, one a and one list of P per block");
  if (k == 1 && a[0] == 1) throw DomainError("dim_2concat is not defined for k = 1, a = (1)");
  int d = k - 3;
  for (int i = 0; i < k; ++i) {
    if (a[i] < 0 || p[i] < 0) throw DomainError("dim_2concat needs nonnegative a and p");
    if (static_cast<int>(P[i].size()) != a[i]) throw DomainError("block " + std::to_string(i + 1) + " needs a_i entries of P");
    for (int v : P[i]) {
      if (v < 0) throw DomainError("dim_2concat needs nonnegative piece dimensions");
      d += v;
    }
    d -= (a[i] - 1) * p[i];
    d += a[i];
  }
  return d;
}

namespace {

// Ordered splits of n into `parts` nonzero vectors.
void splits(const NVector& n, int parts, std::vector<NVector>& prefix, std::vector<std::vector<NVector>>& out) {
  if (parts == 0) {
    if (is_zero(n)) out.push_back(prefix);
    return;
  }
  for_each_sub_vector(n, [&](const NVector& q) {
    prefix.push_back(q);
    splits(minus(n, q), parts - 1, prefix, out);
    prefix.pop_back();
  });
}

// Sum over dimension assignments to the pieces of prod count(piece, dim),
// restricted to assignments the dimension function maps to m.
template <class Count, class Dim>
BigInt sum_over_dimensions(const std::vector<std::pair<Tree, NVector>>& pieces, int m, Count&& count, Dim&& dim) {
  std::vector<int> dims(pieces.size(), 0);
  std::vector<int> tops;
  for (const auto& piece : pieces) tops.push_back(top_rank(piece.second));
  BigInt total = 0;
  while (true) {
    if (dim(dims) == m) {
      BigInt product = 1;
      for (std::size_t i = 0; i < pieces.size() && product != 0; ++i) product *= count(pieces[i].first, dims[i], pieces[i].second);
      total += product;
    }
    std::size_t i = 0;
    while (i < dims.size() && dims[i] == tops[i]) dims[i++] = 0;
    if (i == dims.size()) break;
    ++dims[i];
  }
  return total;
}

}  // namespace

BigInt count_W_by_branches(const Tree& t, int m, const NVector& n) {
  check_shape(t, n);
  if (m < 0 || is_zero(n)) return 0;
  if (t.is_leaf()) return count_K(m, n[0]);
  auto count = [](const Tree& piece, int d, const NVector& q) { return count_W_by_branches(piece, d, q); };
  const int p = dim_tree(t);
  BigInt total = 0;

  for (int a = 2; a <= total_points(n); ++a) {
    std::vector<std::vector<NVector>> all;
    std::vector<NVector> prefix;
    splits(n, a, prefix, all);
    for (const auto& split : all) {
      std::vector<std::pair<Tree, NVector>> pieces;
      for (const auto& q : split) pieces.emplace_back(t, q);
      total += sum_over_dimensions(pieces, m, count, [&](const std::vector<int>& dims) {
        return dim_2concat({p}, {a}, {dims});
      });
    }
  }

  const auto& kids = t.children();
  const auto blocks = blocks_of(t, n);
  std::vector<int> ps;
  for (const auto& c : kids) ps.push_back(dim_tree(c));
  // a_i = 0 exactly on empty blocks; otherwise every stack height 1..|block|.
  std::vector<int> a(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) a[i] = is_zero(blocks[i]) ? 0 : 1;
  while (true) {
    std::vector<std::vector<std::vector<NVector>>> per_block(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      std::vector<NVector> prefix;
      splits(blocks[i], a[i], prefix, per_block[i]);
    }
    std::vector<std::size_t> choice(kids.size(), 0);
    bool any = std::all_of(per_block.begin(), per_block.end(), [](const auto& v) { return !v.empty(); });
    while (any) {
      std::vector<std::pair<Tree, NVector>> pieces;
      for (std::size_t i = 0; i < kids.size(); ++i)
        for (const auto& q : per_block[i][choice[i]]) pieces.emplace_back(kids[i], q);
      total += sum_over_dimensions(pieces, m, count, [&](const std::vector<int>& dims) {
        std::vector<std::vector<int>> P(kids.size());
        std::size_t at = 0;
        for (std::size_t i = 0; i < kids.size(); ++i)
          for (int j = 0; j < a[i]; ++j) P[i].push_back(dims[at++]);
        return dim_2concat(ps, a, P);
      });
      std::size_t i = 0;
      while (i < choice.size() && choice[i] + 1 == per_block[i].size()) choice[i++] = 0;
      if (i == choice.size()) break;
      ++choice[i];
    }
    std::size_t i = 0;
    while (i < a.size() && (is_zero(blocks[i]) || a[i] == total_points(blocks[i]))) {
      if (!is_zero(blocks[i])) a[i] = 1;
      ++i;
    }
    if (i == a.size()) break;
    ++a[i];
  }
  return total;
}

}  // namespace twoassoc
