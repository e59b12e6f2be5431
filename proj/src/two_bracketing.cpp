#include "twoassoc/two_bracketing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "twoassoc/poset.hpp"

namespace twoassoc {

void require_valid_n(const NVector& n) {
  if (n.empty()) throw DomainError("n must have at least one entry");
  for (int v : n)
    if (v < 0) throw DomainError("entries of n must be nonnegative");
  if (total_points(n) == 0) throw DomainError("n must be nonzero (n != 0): at least one line needs a marked point");
}

int total_points(const NVector& n) { return std::accumulate(n.begin(), n.end(), 0); }

std::string n_to_text(const NVector& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

NVector parse_n(const std::string& text) {
  NVector n;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot read '" + item + "' as an entry of n");
    }
    if (used != item.size()) throw DomainError("cannot read '" + item + "' as an entry of n");
    n.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw DomainError("trailing comma in n");
  require_valid_n(n);
  return n;
}

std::string Extent::to_text() const {
  return is_gap ? "^" + std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

bool extent_within(const Extent& inner, const Extent& outer) {
  if (outer.is_gap) return inner.is_gap && inner.lo == outer.lo;
  if (inner.is_gap) return outer.lo - 1 <= inner.lo && inner.lo <= outer.hi;
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

std::optional<int> extent_side(const Extent& e, const Extent& f) {
  if (e.is_gap && f.is_gap) return e.lo == f.lo ? 0 : (e.lo < f.lo ? -1 : 1);
  if (e.is_gap) {
    if (e.lo <= f.lo - 1) return -1;
    if (e.lo >= f.hi) return 1;
    return std::nullopt;
  }
  if (f.is_gap) {
    if (f.lo <= e.lo - 1) return 1;
    if (f.lo >= e.hi) return -1;
    return std::nullopt;
  }
  if (e.hi < f.lo) return -1;
  if (f.hi < e.lo) return 1;
  return std::nullopt;
}

int TwoBracket::point_count() const {
  int c = 0;
  for (const auto& e : extents) c += e.point_count();
  return c;
}

std::string TwoBracket::to_text() const {
  std::string s = "[" + std::to_string(B.lo) + "," + std::to_string(B.hi) + "]{";
  for (std::size_t i = 0; i < extents.size(); ++i) s += (i ? ";" : "") + extents[i].to_text();
  return s + "}";
}

TwoBracket TwoBracket::singleton(int line, int j) { return TwoBracket{Interval{line, line}, {Extent::points(j, j)}}; }

TwoBracket TwoBracket::maximal(const NVector& n) {
  TwoBracket x{Interval{1, static_cast<int>(n.size())}, {}};
  for (int v : n) x.extents.push_back(v > 0 ? Extent::points(1, v) : Extent::gap(0));
  return x;
}

bool two_bracket_contains(const TwoBracket& outer, const TwoBracket& inner) {
  if (!outer.B.contains(inner.B)) return false;
  for (int i = inner.B.lo; i <= inner.B.hi; ++i)
    if (!extent_within(inner.on(i), outer.on(i))) return false;
  return true;
}

std::optional<int> two_bracket_side(const TwoBracket& x, const TwoBracket& y) {
  const int lo = std::max(x.B.lo, y.B.lo);
  const int hi = std::min(x.B.hi, y.B.hi);
  int side = 0;
  for (int i = lo; i <= hi; ++i) {
    auto s = extent_side(x.on(i), y.on(i));
    if (!s) return std::nullopt;
    if (*s != 0) {
      if (side != 0 && *s != side) return std::nullopt;
      side = *s;
    }
  }
  return side;
}

bool compatible(const TwoBracket& x, const TwoBracket& y) {
  if (!x.B.contains(y.B) && !y.B.contains(x.B) && !x.B.disjoint(y.B)) return false;
  if (two_bracket_contains(x, y) || two_bracket_contains(y, x)) return true;
  return two_bracket_side(x, y).has_value();
}

TwoBracketing::TwoBracketing(NVector n_, Bracketing bracketing_, std::vector<TwoBracket> two_brackets_)
    : n(std::move(n_)), bracketing(std::move(bracketing_)), two_brackets(std::move(two_brackets_)) {
  std::sort(two_brackets.begin(), two_brackets.end());
  two_brackets.erase(std::unique(two_brackets.begin(), two_brackets.end()), two_brackets.end());
}

bool TwoBracketing::contains(const TwoBracket& x) const {
  return std::binary_search(two_brackets.begin(), two_brackets.end(), x);
}

std::string TwoBracketing::label() const {
  std::string s = bracketing.to_tree().to_text();
  for (const auto& x : removables(*this).two_brackets) s += " " + x.to_text();
  return s;
}

namespace {

void check_well_formed(const TwoBracketing& tb) {
  require_valid_n(tb.n);
  if (tb.bracketing.r() != tb.r()) throw DomainError("bracketing and n disagree on the number of lines");
  for (const auto& x : tb.two_brackets) {
    if (x.B.lo < 1 || x.B.hi > tb.r() || x.B.lo > x.B.hi) throw DomainError("2-bracket over an out-of-range bracket");
    if (static_cast<int>(x.extents.size()) != x.B.size())
      throw DomainError("2-bracket " + x.to_text() + " needs one extent per line");
    for (int i = x.B.lo; i <= x.B.hi; ++i) {
      const auto& e = x.on(i);
      const int ni = tb.n[i - 1];
      const bool in_range = e.is_gap ? (0 <= e.lo && e.lo <= ni) : (1 <= e.lo && e.lo <= e.hi && e.hi <= ni);
      if (!in_range) throw DomainError("extent " + e.to_text() + " out of range on line " + std::to_string(i));
    }
  }
}

Verdict fail(std::string why) { return Verdict{false, std::move(why)}; }

}  // namespace

Verdict explain_two_bracketing(const TwoBracketing& tb) {
  check_well_formed(tb);
  const auto& all = tb.two_brackets;
  const auto brs = tb.bracketing.with_singletons();
  auto in_brs = [&](const Interval& b) { return std::binary_search(brs.begin(), brs.end(), b); };

  const auto top = TwoBracket::maximal(tb.n);
  if (!tb.contains(top)) return fail("maximal 2-bracket missing");
  for (int i = 1; i <= tb.r(); ++i)
    for (int j = 1; j <= tb.n[i - 1]; ++j)
      if (!tb.contains(TwoBracket::singleton(i, j)))
        return fail("point singleton (" + std::to_string(i) + "," + std::to_string(j) + ") missing");
  for (const auto& x : all) {
    if (!in_brs(x.B)) return fail("2-bracket " + x.to_text() + " lies over a bracket not in the bracketing");
    if (x.point_count() == 0) return fail("2-bracket " + x.to_text() + " encloses no marked point");
  }

  const int N = static_cast<int>(all.size());
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (!compatible(all[a], all[b])) return fail(all[a].to_text() + " and " + all[b].to_text() + " cross");

  // Each 2-bracket other than the maximal one hangs under its smallest container.
  std::vector<std::vector<int>> children(N);
  for (int x = 0; x < N; ++x) {
    if (all[x] == top) continue;
    std::vector<int> containers;
    for (int y = 0; y < N; ++y)
      if (y != x && two_bracket_contains(all[y], all[x])) containers.push_back(y);
    std::vector<int> minimal;
    for (int y : containers) {
      bool smallest = true;
      for (int z : containers)
        if (z != y && two_bracket_contains(all[y], all[z])) smallest = false;
      if (smallest) minimal.push_back(y);
    }
    if (minimal.size() != 1) return fail(all[x].to_text() + " has no unique smallest container");
    children[minimal[0]].push_back(x);
  }

  for (int x = 0; x < N; ++x) {
    const auto& B = all[x].B;
    const auto& kids = children[x];
    if (kids.empty()) {
      if (all[x].is_point_singleton()) continue;
      return fail(all[x].to_text() + " is empty inside but not a point singleton");
    }
    const auto same = std::count_if(kids.begin(), kids.end(), [&](int c) { return all[c].B == B; });
    if (same > 0) {
      if (same != static_cast<long>(kids.size())) return fail(all[x].to_text() + " mixes stacked and side-by-side contents");
      if (kids.size() < 2) return fail(all[x].to_text() + " has a single stacked child");
    } else {
      if (B.size() == 1) return fail(all[x].to_text() + " has contents over no smaller bracket");
      const auto subs = tb.bracketing.children_of(B);
      for (int c : kids)
        if (std::find(subs.begin(), subs.end(), all[c].B) == subs.end())
          return fail(all[c].to_text() + " skips a bracket level inside " + all[x].to_text());
    }
    // Children over the same bracket must stack in a strict order.
    std::map<Interval, std::vector<int>> groups;
    for (int c : kids) groups[all[c].B].push_back(c);
    for (const auto& [bracket, group] : groups) {
      std::vector<int> scores;
      for (int c : group) {
        int below = 0;
        for (int d : group)
          if (d != c && two_bracket_side(all[c], all[d]) == -1) ++below;
        scores.push_back(below);
      }
      std::sort(scores.begin(), scores.end());
      for (int i = 0; i < static_cast<int>(scores.size()); ++i)
        if (scores[i] != i) return fail("children of " + all[x].to_text() + " do not stack in a strict order");
    }
  }
  return {};
}

bool validate_two_bracketing(const TwoBracketing& tb) { return explain_two_bracketing(tb).ok; }

Bracketing forgetful_map(const TwoBracketing& tb) { return tb.bracketing; }

TwoBracketing top_element(const NVector& n) {
  require_valid_n(n);
  const int r = static_cast<int>(n.size());
  std::vector<TwoBracket> xs{TwoBracket::maximal(n)};
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= n[i - 1]; ++j) xs.push_back(TwoBracket::singleton(i, j));
  return TwoBracketing(n, Bracketing(r, {Interval{1, r}}), std::move(xs));
}

Removables removables(const TwoBracketing& tb) {
  Removables out;
  out.brackets = tb.bracketing.removable();
  const auto top = TwoBracket::maximal(tb.n);
  for (const auto& x : tb.two_brackets)
    if (!x.is_point_singleton() && x != top) out.two_brackets.push_back(x);
  return out;
}

TwoBracketing restrict_to_bracket(const TwoBracketing& tb, const Interval& B) {
  if (!tb.bracketing.contains(B)) throw DomainError("bracket is not part of the 2-bracketing");
  NVector sub(tb.n.begin() + (B.lo - 1), tb.n.begin() + B.hi);
  require_valid_n(sub);
  const int s = B.size();
  const int shift = B.lo - 1;
  std::vector<TwoBracket> xs{TwoBracket::maximal(sub)};
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= sub[i - 1]; ++j) xs.push_back(TwoBracket::singleton(i, j));
  for (const auto& x : tb.two_brackets)
    if (x.B == B) xs.push_back(TwoBracket{Interval{B.lo - shift, B.hi - shift}, x.extents});
  return TwoBracketing(std::move(sub), Bracketing(s, {Interval{1, s}}), std::move(xs));
}

nlohmann::ordered_json two_bracketing_to_json(const TwoBracketing& tb) {
  nlohmann::ordered_json doc;
  doc["n"] = tb.n;
  doc["brackets"] = bracketing_to_json(tb.bracketing)["brackets"];
  auto list = nlohmann::ordered_json::array();
  for (const auto& x : tb.two_brackets) {
    auto extents = nlohmann::ordered_json::array();
    for (int i = x.B.lo; i <= x.B.hi; ++i) {
      const auto& e = x.on(i);
      nlohmann::ordered_json item;
      item["line"] = i;
      if (e.is_gap) item["gap"] = e.lo;
      else item["points"] = {e.lo, e.hi};
      extents.push_back(std::move(item));
    }
    nlohmann::ordered_json entry;
    entry["B"] = {x.B.lo, x.B.hi};
    entry["extents"] = std::move(extents);
    list.push_back(std::move(entry));
  }
  doc["two_brackets"] = std::move(list);
  return doc;
}

TwoBracketing two_bracketing_from_json(const nlohmann::json& doc) {
  NVector n = doc.at("n").get<NVector>();
  std::vector<Interval> brackets;
  for (const auto& iv : doc.at("brackets")) brackets.push_back(Interval{iv.at(0).get<int>(), iv.at(1).get<int>()});
  std::vector<TwoBracket> xs;
  for (const auto& entry : doc.at("two_brackets")) {
    TwoBracket x{Interval{entry.at("B").at(0).get<int>(), entry.at("B").at(1).get<int>()}, {}};
    int expected_line = x.B.lo;
    for (const auto& e : entry.at("extents")) {
      if (e.at("line").get<int>() != expected_line++) throw DomainError("extents must list the lines of B in order");
      if (e.contains("gap")) x.extents.push_back(Extent::gap(e.at("gap").get<int>()));
      else x.extents.push_back(Extent::points(e.at("points").at(0).get<int>(), e.at("points").at(1).get<int>()));
    }
    xs.push_back(std::move(x));
  }
  const int r = static_cast<int>(n.size());
  return TwoBracketing(std::move(n), Bracketing(r, std::move(brackets)), std::move(xs));
}

}  // namespace twoassoc
