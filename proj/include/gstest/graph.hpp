#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gstest/pauli.hpp"

namespace gstest {

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

enum class Boundary { open, periodic };

// Cubic lattice of cells; a qubit sits on every edge and every face.
struct RhgSpec {
  std::array<int, 3> cells{1, 1, 1};
  Boundary boundary = Boundary::periodic;
};

// Undirected simple graph with dense 0-based vertex ids and sorted
// adjacency lists. Lattice builders attach an integer coordinate per
// vertex; hand-built graphs usually have none.
class Graph {
 public:
  Graph() = default;

  // Validates ids, rejects self-loops and duplicate edges (ParseError).
  static Graph from_edges(
      std::size_t vertex_count,
      std::span<const std::pair<std::uint32_t, std::uint32_t>> edge_list);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const;
  std::size_t degree(std::uint32_t v) const { return neighbors(v).size(); }

  bool has_coords() const { return !coords_.empty(); }
  std::array<int, 3> coord(std::uint32_t v) const;
  void attach_coords(std::vector<std::array<int, 3>> coords);

  // Each edge once, smaller id first, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::array<int, 3>> coords_;
};

Graph build_rhg(const RhgSpec& spec);

// BFS hop count; kUnreachable when u and v are in different components.
std::uint32_t graph_distance(const Graph& g, std::uint32_t u, std::uint32_t v);

// X on v, Z on every neighbor of v; weight deg(v) + 1.
SparsePauli stabilizer_generator(const Graph& g, std::uint32_t v);

// Wire schema: {"n": int, "edges": [[u,v],...], "coords": [[x,y,z],...]?}
// with u < v in every edge pair and edges sorted; load accepts any order.
Graph load_graph_json(std::string_view text);
std::string export_graph_json(const Graph& g);

// Graphviz "graph { ... }" with vertex ids as node names and, when the
// graph has coordinates, a pos attribute per node.
std::string export_graph_dot(const Graph& g);

}  // namespace gstest
