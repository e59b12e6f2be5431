#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twoassoc/poset.hpp"
#include "twoassoc/two_bracketing.hpp"

namespace twoassoc {

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t max_elements = 250000;
};

/// The face poset W_n. `poset` ids index `elements` and `pi_labels`; poset
/// labels are TwoBracketing::label(), and elements are sorted by
/// (rank, label).
struct WnPoset {
  NVector n;
  RankedPoset poset;
  std::vector<TwoBracketing> elements;
  std::vector<std::string> pi_labels;  // tree text of the forgetful image
};

/// Every valid 2-bracketing of n, grouped by tree in all_trees order.
std::vector<TwoBracketing> enumerate_two_bracketings(const NVector& n, const EnumerationLimits& limits = {});

/// Throws GradingError if the result is not graded with a unique maximum of
/// rank max(0, |n| + r - 3); SizeCapExceeded past the element cap.
WnPoset enumerate_Wn(const NVector& n, const EnumerationLimits& limits = {});

/// W_n with the formal minimum adjoined at rank -1 (index 0).
RankedPoset completed(const WnPoset& w);

/// max(0, |n| + r - 3).
int top_rank(const NVector& n);

}  // namespace twoassoc
