#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "twoassoc/tree.hpp"

namespace twoassoc {

/// Marked-point counts (n_1..n_r), nonnegative and not all zero.
using NVector = std::vector<int>;

/// Throws DomainError unless n is a valid marked-point vector.
void require_valid_n(const NVector& n);
int total_points(const NVector& n);
std::string n_to_text(const NVector& n);  // "(1,1)"
/// Comma-separated list as typed on the command line: "2,1".
NVector parse_n(const std::string& text);

/// What a 2-bracket encloses on one line: a run of consecutive marked points
/// a..b, or an empty crossing in gap g (between points g and g+1).
struct Extent {
  bool is_gap = false;
  int lo = 0;
  int hi = 0;

  static Extent points(int a, int b) { return Extent{false, a, b}; }
  static Extent gap(int g) { return Extent{true, g, g}; }

  int point_count() const { return is_gap ? 0 : hi - lo + 1; }
  std::string to_text() const;  // "1-2" or "^0"

  friend bool operator==(const Extent&, const Extent&) = default;
  friend auto operator<=>(const Extent&, const Extent&) = default;
};

/// Containment of extents on one line. A gap lies inside a run of points
/// when it touches or falls between them.
bool extent_within(const Extent& inner, const Extent& outer);

/// -1 if e lies strictly below f on the line, +1 if above, 0 if the two are
/// the same gap, nullopt if they overlap.
std::optional<int> extent_side(const Extent& e, const Extent& f);

struct TwoBracket {
  Interval B;
  std::vector<Extent> extents;  // one per line of B, in order

  const Extent& on(int line) const { return extents.at(line - B.lo); }
  int point_count() const;
  bool is_point_singleton() const { return B.size() == 1 && !extents[0].is_gap && extents[0].lo == extents[0].hi; }
  std::string to_text() const;  // "[1,2]{1-1;^0}"

  static TwoBracket singleton(int line, int j);
  static TwoBracket maximal(const NVector& n);

  friend bool operator==(const TwoBracket&, const TwoBracket&) = default;
  friend auto operator<=>(const TwoBracket&, const TwoBracket&) = default;
};

/// inner is geometrically enclosed by outer: bracket nested and each shared
/// line's extent contained.
bool two_bracket_contains(const TwoBracket& outer, const TwoBracket& inner);

/// For two 2-brackets that are separated on every shared line: -1 if x lies
/// below y, +1 if above, 0 if no shared line decides. nullopt if they meet
/// on some line or the shared lines disagree about which is on top.
std::optional<int> two_bracket_side(const TwoBracket& x, const TwoBracket& y);

/// Brackets nested or disjoint, and the 2-brackets nested or separated.
bool compatible(const TwoBracket& x, const TwoBracket& y);

struct TwoBracketing {
  NVector n;
  Bracketing bracketing;
  std::vector<TwoBracket> two_brackets;  // sorted, unique, forced members included

  TwoBracketing() = default;
  TwoBracketing(NVector n, Bracketing bracketing, std::vector<TwoBracket> two_brackets);

  int r() const { return static_cast<int>(n.size()); }
  bool contains(const TwoBracket& x) const;
  /// Tree text plus the non-forced 2-brackets; unique per element.
  std::string label() const;

  friend bool operator==(const TwoBracketing&, const TwoBracketing&) = default;
};

struct Verdict {
  bool ok = true;
  std::string reason;
};

/// Full predicate with the first failed condition. Throws DomainError on
/// malformed input (bad n, extents out of range, wrong number of extents).
Verdict explain_two_bracketing(const TwoBracketing& tb);
bool validate_two_bracketing(const TwoBracketing& tb);

Bracketing forgetful_map(const TwoBracketing& tb);
TwoBracketing top_element(const NVector& n);

struct Removables {
  std::vector<Interval> brackets;
  std::vector<TwoBracket> two_brackets;
};
Removables removables(const TwoBracketing& tb);

/// Brackets: singletons of B and B itself. 2-brackets: point singletons,
/// those of tb lying over B, and the maximal one of n(B); lines renumbered
/// from 1. Throws DomainError if B is not in tb or n(B) is zero.
TwoBracketing restrict_to_bracket(const TwoBracketing& tb, const Interval& B);

/// {"n", "brackets", "two_brackets": [{"B", "extents": [{"line", "points"|"gap"}]}]}
nlohmann::ordered_json two_bracketing_to_json(const TwoBracketing& tb);
TwoBracketing two_bracketing_from_json(const nlohmann::json& doc);

}  // namespace twoassoc
