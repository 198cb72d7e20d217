#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace catnet {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

struct Edge {
  EdgeId id = 0;
  VertexId source = 0;
  VertexId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed graph with explicit vertex and edge ids. Loops and
/// parallel edges are allowed here; constructions that need a simple graph
/// check `is_simple()` themselves.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws Error(InvalidGraph) on duplicate ids or dangling endpoints.
  DiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Graph on vertices 0..n-1 and no edges.
  static DiGraph with_vertices(std::size_t n);

  VertexId add_vertex();
  EdgeId add_edge(VertexId source, VertexId target);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  const Edge& edge(EdgeId e) const;
  bool has_arc(VertexId source, VertexId target) const;

  /// Edge ids leaving / entering v, ascending.
  std::vector<EdgeId> out_edges(VertexId v) const;
  std::vector<EdgeId> in_edges(VertexId v) const;
  /// Distinct successor vertices, ascending.
  std::vector<VertexId> successors(VertexId v) const;

  bool is_simple() const;

  /// Subgraph induced on `keep` (ids preserved).
  DiGraph induced_subgraph(std::span<const VertexId> keep) const;

  VertexId max_vertex_id() const;
  EdgeId max_edge_id() const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void rebuild_index();

  std::vector<VertexId> vertices_;  // ascending
  std::vector<Edge> edges_;         // ascending by id
  std::map<VertexId, std::size_t> vertex_pos_;
  std::map<EdgeId, std::size_t> edge_pos_;
};

/// G* : the network plus a disjoint base vertex carrying a single loop.
struct PointedDiGraph {
  DiGraph graph;  // includes the star pair
  VertexId star_vertex = 0;
  EdgeId star_edge = 0;

  /// The underlying network with the star pair removed.
  DiGraph network() const;
  /// Non-base edge ids, ascending.
  std::vector<EdgeId> network_edges() const;
  std::vector<VertexId> network_vertices() const;
};

PointedDiGraph to_pointed(const DiGraph& g);

/// Strongly connected components, each sorted ascending, emitted in reverse
/// topological order of the condensation. DFS roots and successors are
/// visited smallest id first.
std::vector<std::vector<VertexId>> tarjan_scc(const DiGraph& g);

struct Condensation {
  DiGraph dag;                                     // vertex i = components[i]
  std::vector<std::vector<VertexId>> components;   // as returned by tarjan_scc
  std::map<VertexId, VertexId> component_of;
};

Condensation condense(const DiGraph& g);

/// Acyclic quotient by strongly connected components; parallel edges collapsed.
DiGraph condensation(const DiGraph& g);

/// Kahn topological order with smallest-id tie breaking.
/// Throws Error(CycleDetected) if g has a directed cycle.
std::vector<VertexId> kahn_order(const DiGraph& g);

bool is_topological_order(const DiGraph& g, std::span<const VertexId> order);

enum class ErMode { Directed, Undirected };

/// G(n,p). Directed mode samples every ordered pair u != v; undirected mode
/// samples every unordered pair once and stores it as u -> v with u < v.
DiGraph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed,
                        ErMode mode = ErMode::Directed);

/// Fully connected feedforward layers; vertices numbered layer by layer.
DiGraph gen_mlp(std::span<const std::size_t> layer_sizes);

}  // namespace catnet
