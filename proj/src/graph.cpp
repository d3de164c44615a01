#include "gstest/graph.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "json.hpp"

#include "gstest/errors.hpp"

namespace gstest {

Graph Graph::from_edges(
    std::size_t vertex_count,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edge_list) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  for (const auto& [u, v] : edge_list) {
    if (u >= vertex_count || v >= vertex_count)
      throw ParseError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") references a vertex id >= " +
                       std::to_string(vertex_count));
    if (u == v)
      throw ParseError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    const auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end())
      throw ParseError("duplicate edge (" + std::to_string(v) + ", " +
                       std::to_string(*dup) + ")");
  }
  return g;
}

std::span<const std::uint32_t> Graph::neighbors(std::uint32_t v) const {
  if (v >= adjacency_.size())
    throw VertexOutOfRange("vertex " + std::to_string(v) +
                           " out of range for graph of size " +
                           std::to_string(adjacency_.size()));
  return adjacency_[v];
}

std::array<int, 3> Graph::coord(std::uint32_t v) const {
  if (!has_coords() || v >= coords_.size())
    throw VertexOutOfRange("no coordinate stored for vertex " +
                           std::to_string(v));
  return coords_[v];
}

void Graph::attach_coords(std::vector<std::array<int, 3>> coords) {
  if (coords.size() != adjacency_.size())
    throw ParseError("coords length " + std::to_string(coords.size()) +
                     " does not match vertex count " +
                     std::to_string(adjacency_.size()));
  coords_ = std::move(coords);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t v = 0; v < adjacency_.size(); ++v) {
    for (const std::uint32_t u : adjacency_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;  // already sorted: outer loop ascending, lists sorted
}

namespace {

int count_odd(int x, int y, int z) {
  return (x & 1) + (y & 1) + (z & 1);
}

}  // namespace

// Qubits sit at the integer points of [0, 2Lx] x [0, 2Ly] x [0, 2Lz] with
// exactly one odd coordinate (edge qubits) or exactly two (face qubits);
// adjacency is unit L1 distance. Periodic boundaries identify 2L with 0.
Graph build_rhg(const RhgSpec& spec) {
  for (const int c : spec.cells) {
    if (c < 1)
      throw SpecInvalid("cell counts must be positive");
    if (spec.boundary == Boundary::periodic && c < 2)
      throw SpecInvalid(
          "periodic boundaries need at least 2 cells per axis to stay a "
          "simple graph");
  }
  const bool periodic = spec.boundary == Boundary::periodic;
  const std::array<int, 3> ext = {
      periodic ? 2 * spec.cells[0] : 2 * spec.cells[0] + 1,
      periodic ? 2 * spec.cells[1] : 2 * spec.cells[1] + 1,
      periodic ? 2 * spec.cells[2] : 2 * spec.cells[2] + 1};

  std::vector<std::array<int, 3>> coords;
  std::vector<std::int64_t> id_at(
      static_cast<std::size_t>(ext[0]) * ext[1] * ext[2], -1);
  const auto cell = [&](int x, int y, int z) {
    return (static_cast<std::size_t>(x) * ext[1] + y) * ext[2] + z;
  };
  for (int x = 0; x < ext[0]; ++x) {
    for (int y = 0; y < ext[1]; ++y) {
      for (int z = 0; z < ext[2]; ++z) {
        const int odd = count_odd(x, y, z);
        if (odd == 1 || odd == 2) {
          id_at[cell(x, y, z)] = static_cast<std::int64_t>(coords.size());
          coords.push_back({x, y, z});
        }
      }
    }
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list;
  static constexpr int kStep[6][3] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                      {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  for (std::uint32_t v = 0; v < coords.size(); ++v) {
    for (const auto& s : kStep) {
      int nx = coords[v][0] + s[0];
      int ny = coords[v][1] + s[1];
      int nz = coords[v][2] + s[2];
      if (periodic) {
        nx = (nx + ext[0]) % ext[0];
        ny = (ny + ext[1]) % ext[1];
        nz = (nz + ext[2]) % ext[2];
      } else if (nx < 0 || ny < 0 || nz < 0 || nx >= ext[0] || ny >= ext[1] ||
                 nz >= ext[2]) {
        continue;
      }
      const std::int64_t u = id_at[cell(nx, ny, nz)];
      if (u >= 0 && static_cast<std::uint32_t>(u) > v)
        edge_list.emplace_back(v, static_cast<std::uint32_t>(u));
    }
  }

  Graph g = Graph::from_edges(coords.size(), edge_list);
  g.attach_coords(std::move(coords));
  return g;
}

std::uint32_t graph_distance(const Graph& g, std::uint32_t u,
                             std::uint32_t v) {
  g.neighbors(u);  // bounds checks
  g.neighbors(v);
  if (u == v) return 0;
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  dist[u] = 0;
  std::deque<std::uint32_t> frontier{u};
  while (!frontier.empty()) {
    const std::uint32_t w = frontier.front();
    frontier.pop_front();
    for (const std::uint32_t x : g.neighbors(w)) {
      if (dist[x] != kUnreachable) continue;
      dist[x] = dist[w] + 1;
      if (x == v) return dist[x];
      frontier.push_back(x);
    }
  }
  return kUnreachable;
}

SparsePauli stabilizer_generator(const Graph& g, std::uint32_t v) {
  SparsePauli s;
  for (const std::uint32_t u : g.neighbors(v)) s.set(u, Pauli::Z);
  s.set(v, Pauli::X);
  return s;
}

Graph load_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON must be an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_unsigned())
    throw ParseError("\"n\" must be a non-negative integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j["edges"].is_array())
    throw ParseError("\"edges\" must be an array of [u, v] pairs");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw ParseError("every edge must be a pair of non-negative integers");
    edge_list.emplace_back(e[0].get<std::uint32_t>(),
                           e[1].get<std::uint32_t>());
  }
  Graph g = Graph::from_edges(n, edge_list);
  if (j.contains("coords")) {
    if (!j["coords"].is_array() || j["coords"].size() != n)
      throw ParseError("\"coords\" must list one [x, y, z] per vertex");
    std::vector<std::array<int, 3>> coords;
    coords.reserve(n);
    for (const auto& c : j["coords"]) {
      if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() ||
          !c[1].is_number_integer() || !c[2].is_number_integer())
        throw ParseError("every coordinate must be a triple of integers");
      coords.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
    }
    g.attach_coords(std::move(coords));
  }
  return g;
}

std::string export_graph_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_coords()) {
    auto coords = nlohmann::json::array();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      const auto c = g.coord(v);
      coords.push_back({c[0], c[1], c[2]});
    }
    j["coords"] = std::move(coords);
  }
  return j.dump();
}

std::string export_graph_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (g.has_coords()) {
      const auto c = g.coord(v);
      out += " [pos=\"" + std::to_string(c[0]) + "," + std::to_string(c[1]) +
             "," + std::to_string(c[2]) + "\"]";
    }
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace gstest
