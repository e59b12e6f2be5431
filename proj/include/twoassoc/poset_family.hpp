#pragma once

#include <vector>

#include "twoassoc/poset.hpp"

namespace twoassoc {

/// Every bounded graded poset with at most `max_elements` elements whose
/// minimum sits at `min_rank`, as labeled Hasse diagrams (isomorphic copies
/// are not merged). Includes the one-element poset.
std::vector<RankedPoset> bounded_graded_posets(int max_elements, int min_rank = -1);

}  // namespace twoassoc
