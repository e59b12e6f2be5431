#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "twoassoc/bigint.hpp"
#include "twoassoc/memo.hpp"
#include "twoassoc/tree.hpp"
#include "twoassoc/two_bracketing.hpp"

namespace twoassoc {

/// Number of faces of W_n of dimension m lying over the tree T, from the
/// concatenation recurrence. Zero for n = 0 or m < 0; throws DomainError if
/// the length of n differs from the leaf count of T.
BigInt count_W(const Tree& t, int m, const NVector& n);

using CountWKey = std::tuple<std::string, int, NVector>;  // (tree text, m, n)
using CountWMemo = ConcurrentMemo<CountWKey, BigInt>;
CountWMemo& count_W_memo();

/// Dimension of a concatenation of tree pairs:
///   sum P_ij - sum (a_i - 1) p_i + |a| + k - 3
/// with k = p.size(), a_i = P[i].size(). Throws DomainError on inconsistent
/// shapes, negative entries, or the trivial case k = 1, a = (1).
int dim_2concat(const std::vector<int>& p, const std::vector<int>& a, const std::vector<std::vector<int>>& P);

/// Same count, found by listing every recurrence branch explicitly (each
/// piece's n-vector and dimension) and keeping the branches whose
/// dim_2concat equals m. Exponential; meant for small cross-checks.
BigInt count_W_by_branches(const Tree& t, int m, const NVector& n);

}  // namespace twoassoc
