#pragma once

#include <utility>
#include <vector>

#include "twoassoc/bigint.hpp"
#include "twoassoc/memo.hpp"
#include "twoassoc/poset.hpp"
#include "twoassoc/tree.hpp"

namespace twoassoc {

/// Every stable tree with r leaves. Order: number of root children, then the
/// composition of leaf counts, then the children's own orders.
std::vector<Tree> all_trees(int r);

/// Face poset of K_r. Elements are labelled by tree text and sorted by
/// (rank, label); X <= Y iff X carries every bracket of Y.
RankedPoset enumerate_Kr(int r);

/// Number of trees in K_r of dimension m.
BigInt count_K(int m, int r);

using CountKMemo = ConcurrentMemo<std::pair<int, int>, BigInt>;
/// Keyed by (m, r). Exposed so callers can persist or pre-seed it.
CountKMemo& count_K_memo();

}  // namespace twoassoc
