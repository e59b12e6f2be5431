#include "twoassoc/tree.hpp"

#include <algorithm>

#include "twoassoc/poset.hpp"

namespace twoassoc {

Tree Tree::corolla(int r) {
  if (r < 1) throw DomainError("corolla needs at least one leaf");
  if (r == 1) return leaf();
  return node(std::vector<Tree>(r));
}

Tree Tree::node(std::vector<Tree> children) {
  if (children.size() < 2) throw DomainError("internal nodes need at least two children");
  Tree t;
  t.children_ = std::move(children);
  return t;
}

namespace {

Tree parse_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw DomainError("tree text ends early");
  if (text[pos] == '.') {
    ++pos;
    return Tree::leaf();
  }
  if (text[pos] != '(') throw DomainError("unexpected character '" + std::string(1, text[pos]) + "' in tree text");
  ++pos;
  std::vector<Tree> children;
  while (pos < text.size() && text[pos] != ')') children.push_back(parse_at(text, pos));
  if (pos >= text.size()) throw DomainError("unbalanced parenthesis in tree text");
  ++pos;
  if (children.size() < 2) throw DomainError("tree text has a node with fewer than two children");
  return Tree::node(std::move(children));
}

}  // namespace

Tree Tree::parse(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_at(text, pos);
  if (pos != text.size()) throw DomainError("trailing characters in tree text");
  return t;
}

int Tree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

int Tree::internal_count() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const auto& c : children_) n += c.internal_count();
  return n;
}

std::string Tree::to_text() const {
  if (is_leaf()) return ".";
  std::string s = "(";
  for (const auto& c : children_) s += c.to_text();
  return s + ")";
}

int dim_tree(const Tree& t) { return t.leaf_count() - t.internal_count() - 1; }

Tree concat(std::vector<Tree> parts) {
  if (parts.empty()) throw DomainError("concatenation of zero trees");
  if (parts.size() == 1) return std::move(parts.front());
  return Tree::node(std::move(parts));
}

std::vector<Tree> root_decompose(const Tree& t) {
  if (t.is_leaf()) throw DomainError("the bare leaf has no root decomposition");
  return t.children();
}

Bracketing::Bracketing(int r, std::vector<Interval> brackets) : r_(r) {
  if (r < 1) throw DomainError("bracketings need r >= 1");
  for (const auto& b : brackets) {
    if (b.lo < 1 || b.hi > r || b.lo > b.hi) throw DomainError("bracket out of range");
    if (b.size() >= 2) brackets_.push_back(b);
  }
  std::sort(brackets_.begin(), brackets_.end());
  brackets_.erase(std::unique(brackets_.begin(), brackets_.end()), brackets_.end());
  for (std::size_t i = 0; i < brackets_.size(); ++i)
    for (std::size_t j = i + 1; j < brackets_.size(); ++j) {
      const auto& a = brackets_[i];
      const auto& b = brackets_[j];
      if (!a.contains(b) && !b.contains(a) && !a.disjoint(b))
        throw DomainError("brackets overlap without nesting");
    }
  if (r >= 2 && !contains(Interval{1, r})) throw DomainError("bracketing lacks the full bracket");
}

namespace {

void collect_brackets(const Tree& t, int offset, std::vector<Interval>& out) {
  if (t.is_leaf()) return;
  out.push_back(Interval{offset, offset + t.leaf_count() - 1});
  int o = offset;
  for (const auto& c : t.children()) {
    collect_brackets(c, o, out);
    o += c.leaf_count();
  }
}

}  // namespace

Bracketing Bracketing::from_tree(const Tree& t) {
  std::vector<Interval> brackets;
  collect_brackets(t, 1, brackets);
  return Bracketing(t.leaf_count(), std::move(brackets));
}

Tree Bracketing::to_tree() const {
  auto build = [&](auto&& self, const Interval& b) -> Tree {
    if (b.size() == 1) return Tree::leaf();
    std::vector<Tree> kids;
    for (const auto& c : children_of(b)) kids.push_back(self(self, c));
    return Tree::node(std::move(kids));
  };
  return build(build, Interval{1, r_});
}

bool Bracketing::contains(const Interval& b) const {
  if (b.size() == 1) return b.lo >= 1 && b.hi <= r_;
  return std::binary_search(brackets_.begin(), brackets_.end(), b);
}

std::vector<Interval> Bracketing::with_singletons() const {
  std::vector<Interval> all = brackets_;
  for (int i = 1; i <= r_; ++i) all.push_back(Interval{i, i});
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Interval> Bracketing::children_of(const Interval& b) const {
  std::vector<Interval> out;
  int i = b.lo;
  while (i <= b.hi) {
    // Largest stored bracket starting at i strictly inside b, else {i}.
    Interval best{i, i};
    for (const auto& c : brackets_)
      if (c.lo == i && c != b && b.contains(c) && c.size() > best.size()) best = c;
    out.push_back(best);
    i = best.hi + 1;
  }
  return out;
}

std::vector<Interval> Bracketing::removable() const {
  std::vector<Interval> out;
  for (const auto& b : brackets_)
    if (b != Interval{1, r_}) out.push_back(b);
  return out;
}

nlohmann::ordered_json bracketing_to_json(const Bracketing& b) {
  nlohmann::ordered_json doc;
  doc["r"] = b.r();
  auto list = nlohmann::ordered_json::array();
  for (const auto& iv : b.with_singletons()) list.push_back({iv.lo, iv.hi});
  doc["brackets"] = std::move(list);
  return doc;
}

Bracketing bracketing_from_json(const nlohmann::json& doc) {
  std::vector<Interval> brackets;
  for (const auto& iv : doc.at("brackets")) brackets.push_back(Interval{iv.at(0).get<int>(), iv.at(1).get<int>()});
  return Bracketing(doc.at("r").get<int>(), std::move(brackets));
}

}  // namespace twoassoc
