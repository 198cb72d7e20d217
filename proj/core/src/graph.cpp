#include "catnet/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "catnet/error.hpp"
#include "catnet/rng.hpp"

namespace catnet {

DiGraph::DiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(Errc::InvalidGraph, "duplicate vertex id");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].id == edges_[i - 1].id) {
      throw Error(Errc::InvalidGraph, "duplicate edge id " + std::to_string(edges_[i].id));
    }
  }
  rebuild_index();
  for (const Edge& e : edges_) {
    if (!has_vertex(e.source) || !has_vertex(e.target)) {
      throw Error(Errc::InvalidGraph, "edge " + std::to_string(e.id) + " has unknown endpoint");
    }
  }
}

DiGraph DiGraph::with_vertices(std::size_t n) {
  std::vector<VertexId> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<VertexId>(i);
  return DiGraph(std::move(vs), {});
}

void DiGraph::rebuild_index() {
  vertex_pos_.clear();
  edge_pos_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_pos_[vertices_[i]] = i;
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_pos_[edges_[i].id] = i;
}

VertexId DiGraph::add_vertex() {
  const VertexId v = vertices_.empty() ? 0 : vertices_.back() + 1;
  vertices_.push_back(v);
  vertex_pos_[v] = vertices_.size() - 1;
  return v;
}

EdgeId DiGraph::add_edge(VertexId source, VertexId target) {
  if (!has_vertex(source) || !has_vertex(target)) {
    throw Error(Errc::InvalidGraph, "add_edge: unknown endpoint");
  }
  const EdgeId id = edges_.empty() ? 0 : edges_.back().id + 1;
  edges_.push_back(Edge{id, source, target});
  edge_pos_[id] = edges_.size() - 1;
  return id;
}

bool DiGraph::has_vertex(VertexId v) const { return vertex_pos_.count(v) != 0; }
bool DiGraph::has_edge(EdgeId e) const { return edge_pos_.count(e) != 0; }

const Edge& DiGraph::edge(EdgeId e) const {
  auto it = edge_pos_.find(e);
  if (it == edge_pos_.end()) throw Error(Errc::UnknownEdge, "edge " + std::to_string(e));
  return edges_[it->second];
}

bool DiGraph::has_arc(VertexId source, VertexId target) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.source == source && e.target == target;
  });
}

std::vector<EdgeId> DiGraph::out_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const Edge& e : edges_)
    if (e.source == v) out.push_back(e.id);
  return out;
}

std::vector<EdgeId> DiGraph::in_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const Edge& e : edges_)
    if (e.target == v) out.push_back(e.id);
  return out;
}

std::vector<VertexId> DiGraph::successors(VertexId v) const {
  std::vector<VertexId> out;
  for (const Edge& e : edges_)
    if (e.source == v) out.push_back(e.target);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool DiGraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (e.source == e.target) return false;
    if (!seen.emplace(e.source, e.target).second) return false;
  }
  return true;
}

DiGraph DiGraph::induced_subgraph(std::span<const VertexId> keep) const {
  std::set<VertexId> ks(keep.begin(), keep.end());
  std::vector<VertexId> vs;
  for (VertexId v : vertices_)
    if (ks.count(v)) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (ks.count(e.source) && ks.count(e.target)) es.push_back(e);
  return DiGraph(std::move(vs), std::move(es));
}

VertexId DiGraph::max_vertex_id() const { return vertices_.empty() ? -1 : vertices_.back(); }
EdgeId DiGraph::max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }

DiGraph PointedDiGraph::network() const {
  std::vector<VertexId> vs;
  for (VertexId v : graph.vertices())
    if (v != star_vertex) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : graph.edges())
    if (e.id != star_edge) es.push_back(e);
  return DiGraph(std::move(vs), std::move(es));
}

std::vector<EdgeId> PointedDiGraph::network_edges() const {
  std::vector<EdgeId> out;
  for (const Edge& e : graph.edges())
    if (e.id != star_edge) out.push_back(e.id);
  return out;
}

std::vector<VertexId> PointedDiGraph::network_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : graph.vertices())
    if (v != star_vertex) out.push_back(v);
  return out;
}

PointedDiGraph to_pointed(const DiGraph& g) {
  PointedDiGraph out;
  out.star_vertex = g.max_vertex_id() + 1;
  out.star_edge = g.max_edge_id() + 1;
  std::vector<VertexId> vs = g.vertices();
  vs.push_back(out.star_vertex);
  std::vector<Edge> es = g.edges();
  es.push_back(Edge{out.star_edge, out.star_vertex, out.star_vertex});
  out.graph = DiGraph(std::move(vs), std::move(es));
  return out;
}

std::vector<std::vector<VertexId>> tarjan_scc(const DiGraph& g) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[vs[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (VertexId w : g.successors(vs[i])) adj[i].push_back(pos[w]);

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<VertexId>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(vs[w]);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

Condensation condense(const DiGraph& g) {
  Condensation out;
  out.components = tarjan_scc(g);
  for (std::size_t i = 0; i < out.components.size(); ++i)
    for (VertexId v : out.components[i]) out.component_of[v] = static_cast<VertexId>(i);
  std::set<std::pair<VertexId, VertexId>> arcs;
  for (const Edge& e : g.edges()) {
    const VertexId a = out.component_of[e.source];
    const VertexId b = out.component_of[e.target];
    if (a != b) arcs.emplace(a, b);
  }
  out.dag = DiGraph::with_vertices(out.components.size());
  for (const auto& [a, b] : arcs) out.dag.add_edge(a, b);
  return out;
}

DiGraph condensation(const DiGraph& g) { return condense(g).dag; }

std::vector<VertexId> kahn_order(const DiGraph& g) {
  std::map<VertexId, std::size_t> indeg;
  for (VertexId v : g.vertices()) indeg[v] = 0;
  for (const Edge& e : g.edges()) ++indeg[e.target];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.push(v);
  std::vector<VertexId> order;
  order.reserve(g.vertex_count());
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (EdgeId eid : g.out_edges(v)) {
      const VertexId w = g.edge(eid).target;
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != g.vertex_count()) {
    throw Error(Errc::CycleDetected, "graph has a directed cycle; condense first");
  }
  return order;
}

bool is_topological_order(const DiGraph& g, std::span<const VertexId> order) {
  if (order.size() != g.vertex_count()) return false;
  std::map<VertexId, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.has_vertex(order[i]) || !rank.emplace(order[i], i).second) return false;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return rank[e.source] < rank[e.target]; });
}

DiGraph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed, ErMode mode) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidProbability, "p must lie in [0,1]");
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  DiGraph g = DiGraph::with_vertices(n);
  Rng rng(seed);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mode == ErMode::Undirected && v < u) continue;
      if (rng.bernoulli(p)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return g;
}

DiGraph gen_mlp(std::span<const std::size_t> layer_sizes) {
  if (layer_sizes.size() < 2) throw Error(Errc::InvalidArgument, "an MLP needs at least 2 layers");
  for (std::size_t s : layer_sizes)
    if (s == 0) throw Error(Errc::EmptyLayer, "layer of size 0");
  std::size_t total = 0;
  for (std::size_t s : layer_sizes) total += s;
  DiGraph g = DiGraph::with_vertices(total);
  std::size_t offset = 0;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const std::size_t next = offset + layer_sizes[l];
    for (std::size_t i = 0; i < layer_sizes[l]; ++i)
      for (std::size_t j = 0; j < layer_sizes[l + 1]; ++j)
        g.add_edge(static_cast<VertexId>(offset + i), static_cast<VertexId>(next + j));
    offset = next;
  }
  return g;
}

}  // namespace catnet
