#pragma once

#include <string>

#include "json.hpp"

#include "twoassoc/poset.hpp"

namespace twoassoc {

/// {"elements": [{"id", "rank", "label"}], "covers": [[lo, hi]]}
nlohmann::ordered_json poset_to_json(const RankedPoset& p);
RankedPoset poset_from_json(const nlohmann::json& doc);

/// Hasse diagram with one `rank=same` subgraph per rank layer.
std::string poset_to_dot(const RankedPoset& p, const std::string& graph_name = "poset");

/// Same elements, ranks, labels and covers, id for id.
bool identical(const RankedPoset& a, const RankedPoset& b);

}  // namespace twoassoc
