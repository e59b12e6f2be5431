#include "twoassoc/poset_io.hpp"

#include <map>
#include <sstream>

namespace twoassoc {

nlohmann::ordered_json poset_to_json(const RankedPoset& p) {
  nlohmann::ordered_json doc;
  auto elements = nlohmann::ordered_json::array();
  for (int x = 0; x < p.size(); ++x) {
    nlohmann::ordered_json e;
    e["id"] = x;
    e["rank"] = p.rank(x);
    e["label"] = p.label(x);
    elements.push_back(std::move(e));
  }
  auto covers = nlohmann::ordered_json::array();
  for (auto [x, y] : p.covers()) covers.push_back({x, y});
  doc["elements"] = std::move(elements);
  doc["covers"] = std::move(covers);
  return doc;
}

RankedPoset poset_from_json(const nlohmann::json& doc) {
  const auto& elements = doc.at("elements");
  const int n = static_cast<int>(elements.size());
  std::vector<int> ranks(n);
  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  for (const auto& e : elements) {
    int id = e.at("id").get<int>();
    if (id < 0 || id >= n || seen[id]) throw DomainError("element ids must be a permutation of 0..n-1");
    seen[id] = true;
    ranks[id] = e.at("rank").get<int>();
    labels[id] = e.value("label", std::to_string(id));
  }
  std::vector<Cover> covers;
  for (const auto& c : doc.at("covers")) covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return RankedPoset(std::move(ranks), std::move(covers), std::move(labels));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string poset_to_dot(const RankedPoset& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  std::map<int, std::vector<int>> layers;
  for (int x = 0; x < p.size(); ++x) layers[p.rank(x)].push_back(x);
  for (const auto& [rank, ids] : layers) {
    os << "  { rank=same; // rank " << rank << "\n";
    for (int x : ids) os << "    n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
    os << "  }\n";
  }
  for (auto [x, y] : p.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

bool identical(const RankedPoset& a, const RankedPoset& b) {
  return a.ranks() == b.ranks() && a.labels() == b.labels() && a.covers() == b.covers();
}

}  // namespace twoassoc
