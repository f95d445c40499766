#pragma once

#include <nlohmann/json.hpp>

#include "rtd/colored_graph.hpp"
#include "rtd/partition.hpp"
#include "rtd/qp.hpp"
#include "rtd/verify.hpp"

namespace rtd {

// {"n": int, "edges": [[u, v, c], ...]} with u < v, c in {1, 2}, edges
// sorted lexicographically.
nlohmann::json to_json(const ColoredGraph& cg);
// Throws ArgumentError on schema violations.
ColoredGraph colored_graph_from_json(const nlohmann::json& j);

// [[v, ...], ...] in part order.
nlohmann::json to_json(const VertexPartition& part);
VertexPartition partition_from_json(int n, const nlohmann::json& j);

nlohmann::json to_json(const QpPoint& pt);
nlohmann::json to_json(const QpCertificate& cert);
nlohmann::json to_json(const CensusResult& census);

}  // namespace rtd
