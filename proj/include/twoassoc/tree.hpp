#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace twoassoc {

/// Stable rooted ribbon tree: a leaf, or an internal node with an ordered
/// list of at least two children. Leaves are numbered 1..r in reading order.
///
/// Text form: TREE := "." | "(" TREE TREE+ ")".
class Tree {
 public:
  Tree() = default;  // the bare leaf

  static Tree leaf() { return Tree(); }
  static Tree corolla(int r);
  /// Throws DomainError unless there are at least two children.
  static Tree node(std::vector<Tree> children);
  static Tree parse(std::string_view text);

  bool is_leaf() const { return children_.empty(); }
  const std::vector<Tree>& children() const { return children_; }
  int leaf_count() const;
  int internal_count() const;
  std::string to_text() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.to_text() <=> b.to_text();
  }

 private:
  std::vector<Tree> children_;
};

/// Leaf count minus internal-node count minus one.
int dim_tree(const Tree& t);

/// Grafts the trees onto the leaves of a corolla; one tree is returned as is.
Tree concat(std::vector<Tree> parts);

/// Branches above the root, so that concat(root_decompose(t)) == t.
std::vector<Tree> root_decompose(const Tree& t);

/// Closed integer interval [lo, hi], 1-based.
struct Interval {
  int lo = 1;
  int hi = 1;

  int size() const { return hi - lo + 1; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  bool contains(int i) const { return lo <= i && i <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    return b.hi <=> a.hi;  // larger bracket first
  }
};

/// Nested system of brackets of (1..r). Singleton brackets are implicit and
/// never stored; the full bracket is stored whenever r >= 2.
class Bracketing {
 public:
  Bracketing() = default;
  /// Validates and sorts. Singletons in `brackets` are dropped.
  Bracketing(int r, std::vector<Interval> brackets);

  static Bracketing from_tree(const Tree& t);
  Tree to_tree() const;

  int r() const { return r_; }
  const std::vector<Interval>& brackets() const { return brackets_; }
  bool contains(const Interval& b) const;
  /// r - 1 - (number of stored brackets).
  int dim() const { return r_ - 1 - static_cast<int>(brackets_.size()); }

  /// Stored brackets plus all singletons, in canonical order.
  std::vector<Interval> with_singletons() const;

  /// Maximal brackets strictly inside `b`, singletons included, left to right.
  std::vector<Interval> children_of(const Interval& b) const;

  /// Brackets that are neither singletons nor the full bracket.
  std::vector<Interval> removable() const;

  friend bool operator==(const Bracketing&, const Bracketing&) = default;
  friend auto operator<=>(const Bracketing&, const Bracketing&) = default;

 private:
  int r_ = 1;
  std::vector<Interval> brackets_;
};

/// {"r": r, "brackets": [[i, j], ...]} with singletons written out.
nlohmann::ordered_json bracketing_to_json(const Bracketing& b);
Bracketing bracketing_from_json(const nlohmann::json& doc);

}  // namespace twoassoc
