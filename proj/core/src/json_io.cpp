#include "rtd/json_io.hpp"

#include <optional>
#include <string>

#include "rtd/errors.hpp"

namespace rtd {

using nlohmann::json;

json to_json(const ColoredGraph& cg) {
  json edges = json::array();
  for (const auto& e : cg.coloring()) edges.push_back({e.u, e.v, e.color});
  return {{"n", cg.n()}, {"edges", std::move(edges)}};
}

ColoredGraph colored_graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ArgumentError("ColoredGraph JSON must be an object");
    const int n = j.at("n").get<int>();
    if (n < 0 || n > Graph::kMaxVertices)
      throw ArgumentError("ColoredGraph JSON: n out of range");
    ColoredGraph cg(n);
    std::optional<std::pair<int, int>> prev;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        throw ArgumentError("ColoredGraph JSON: edge must be [u, v, c]");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      const int c = e[2].get<int>();
      if (u < 0 || v >= n || u >= v)
        throw ArgumentError("ColoredGraph JSON: edge [" + std::to_string(u) +
                            ", " + std::to_string(v) +
                            "] needs 0 <= u < v < n");
      if (c != 1 && c != 2)
        throw ArgumentError("ColoredGraph JSON: colour must be 1 or 2");
      if (prev && !(*prev < std::make_pair(u, v)))
        throw ArgumentError("ColoredGraph JSON: edges must be sorted and unique");
      prev = std::make_pair(u, v);
      cg.set_edge(u, v, c);
    }
    return cg;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("ColoredGraph JSON: ") + e.what());
  }
}

json to_json(const VertexPartition& part) { return part.parts(); }

VertexPartition partition_from_json(int n, const json& j) {
  try {
    return VertexPartition(n, j.get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("partition JSON: ") + e.what());
  }
}

namespace {

json rational_vector(const Vec5& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_fraction_string(r));
  return out;
}

json decimal_vector(const Vec5& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_double(r));
  return out;
}

}  // namespace

json to_json(const QpPoint& pt) {
  json j = {{"x", rational_vector(pt.x)}, {"x_decimal", decimal_vector(pt.x)}};
  if (pt.y) {
    j["y"] = rational_vector(*pt.y);
    j["y_decimal"] = decimal_vector(*pt.y);
  }
  return j;
}

json to_json(const QpCertificate& cert) {
  return {{"max", to_fraction_string(cert.max_value)},
          {"max_decimal", to_double(cert.max_value)},
          {"argmax", to_json(cert.argmax)},
          {"method", cert.method},
          {"active_sets", cert.active_sets},
          {"kkt_candidates", cert.kkt_candidates},
          {"grid_value", cert.grid_value},
          {"grid_argmax", cert.grid_argmax},
          {"ascent_value", cert.ascent_value},
          {"agreement_gap", cert.agreement_gap}};
}

json to_json(const CensusResult& census) {
  return {{"survivors", census.survivors},
          {"all_pentagonlike", census.all_pentagonlike}};
}

}  // namespace rtd
