#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twoassoc/bigint.hpp"
#include "twoassoc/bitset.hpp"

namespace twoassoc {

/// Precondition violations on combinatorial inputs (incomparable pairs,
/// malformed vectors, unbounded posets handed to bounded-only routines).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cover relation that does not raise rank by exactly one, or a derived
/// order that cannot be graded.
class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cover = std::pair<int, int>;

/// Finite ranked poset on dense ids 0..size()-1.
///
/// Immutable after construction. The order is the reflexive-transitive
/// closure of the covers and is stored as per-element up/down bitsets, so
/// interval queries are a single bitwise AND.
class RankedPoset {
 public:
  RankedPoset() = default;

  /// Validates that covers are acyclic and raise rank by exactly one.
  RankedPoset(std::vector<int> ranks, std::vector<Cover> covers,
              std::vector<std::string> labels = {});

  /// Builds a poset from a full strict order relation (`above[x]` holds every
  /// y with x < y). Covers come from transitive reduction; ranks are the
  /// longest chain length from a minimal element plus `base_rank`.
  /// Throws GradingError if some cover then fails to raise rank by one.
  static RankedPoset from_strict_order(const std::vector<Bitset>& above,
                                       std::vector<std::string> labels,
                                       int base_rank = 0);

  /// Order by reverse inclusion of feature sets: x <= y iff
  /// features[x] is a superset of features[y].
  static RankedPoset from_reverse_inclusion(const std::vector<Bitset>& features,
                                            std::vector<std::string> labels,
                                            int base_rank = 0);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int x) const { return rank_.at(x); }
  const std::vector<int>& ranks() const { return rank_; }
  const std::string& label(int x) const { return label_.at(x); }
  const std::vector<std::string>& labels() const { return label_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return upper_.at(x); }
  const std::vector<int>& lower_covers(int x) const { return lower_.at(x); }

  bool leq(int x, int y) const { return up_.at(x).test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }

  /// Closed up-set {y : x <= y}.
  const Bitset& up(int x) const { return up_.at(x); }
  /// Closed down-set {z : z <= y}.
  const Bitset& down(int y) const { return down_.at(y); }
  /// Closed interval [x, y]; throws DomainError unless x <= y.
  Bitset interval(int x, int y) const;

  /// Elements of even rank, for alternating sums.
  const Bitset& even_ranked() const { return even_; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;

  std::optional<int> find_label(const std::string& label) const;

  /// Ids ordered by (rank, label); useful for deterministic reports.
  std::vector<int> rank_label_order() const;

  /// Relabels ids into (rank, label) order.
  RankedPoset canonicalized() const;

 private:
  void build_closure();

  std::vector<int> rank_;
  std::vector<std::string> label_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  Bitset even_;
};

/// Sum of (-1)^rank over the closed interval [x, y].
long long alternating_sum(const RankedPoset& p, int x, int y);

/// Sum of (-1)^rank over every element of p.
long long alternating_sum(const RankedPoset& p);

bool is_balanced(const RankedPoset& p, int x, int y);

struct EulerianReport {
  bool graded = true;
  std::size_t intervals_checked = 0;
  std::vector<Cover> unbalanced;  // pairs x < y with A([x,y]) != 0

  bool eulerian() const { return graded && unbalanced.empty(); }
};

/// Checks every pair x < y. Gradedness is checked independently of the
/// stored ranks, by comparing shortest and longest cover paths.
EulerianReport verify_eulerian(const RankedPoset& p);

/// True iff every maximal chain in every interval has the same length.
bool is_graded(const RankedPoset& p);

/// Pairs x < y with rank gap 2 whose open interval does not hold exactly
/// two elements.
std::vector<Cover> diamond_violations(const RankedPoset& p);

/// Memoized Möbius function. Safe to share across threads: lookups and
/// insertions are serialized, and insertion is idempotent.
class MobiusTable {
 public:
  explicit MobiusTable(const RankedPoset& p) : poset_(p) {}

  long long operator()(int x, int y) const;

 private:
  long long compute(int x, int y) const;

  const RankedPoset& poset_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, long long> memo_;
};

long long mobius(const RankedPoset& p, int x, int y);

/// Pairs x <= y with mu(x,y) != (-1)^(rank y - rank x).
std::vector<Cover> mobius_violations(const RankedPoset& p);

/// Adds a new element below every minimal element, at index 0.
RankedPoset complete_with_min(const RankedPoset& p, int min_rank,
                              const std::string& label = "min");

/// Adds a new element above every maximal element, at the last index.
RankedPoset complete_with_max(const RankedPoset& p, int max_rank,
                              const std::string& label = "max");

RankedPoset reduced_product(const RankedPoset& p, const RankedPoset& q);
RankedPoset reduced_product(const std::vector<RankedPoset>& factors);

/// Fiber product of posets over a common base. `maps[i][x]` is the base
/// element under factor i's element x. Rank of a tuple is
/// sum(rank F_i) - (k-1) * rank(base image).
RankedPoset fiber_product(const std::vector<RankedPoset>& factors,
                          const RankedPoset& base,
                          const std::vector<std::vector<int>>& maps);

}  // namespace twoassoc
