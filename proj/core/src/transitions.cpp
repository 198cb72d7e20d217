#include "catnet/transitions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "catnet/error.hpp"

namespace catnet {

TransitionSystem::TransitionSystem(std::size_t states, StateId initial, std::optional<StateId> final_state,
                                   std::vector<Label> labels, std::vector<Transition> transitions)
    : states_(states),
      initial_(initial),
      final_(final_state),
      labels_(std::move(labels)),
      transitions_(std::move(transitions)) {
  if (states_ == 0) throw Error(Errc::InvalidArgument, "a transition system needs at least one state");
  if (initial_ >= states_) throw Error(Errc::StateNotFound, "initial state out of range");
  if (final_ && *final_ >= states_) throw Error(Errc::StateNotFound, "final state out of range");
  for (const Transition& t : transitions_) {
    if (t.from >= states_ || t.to >= states_) throw Error(Errc::StateNotFound, "transition endpoint out of range");
    if (t.label >= labels_.size()) throw Error(Errc::InvalidArgument, "transition label out of range");
  }
  for (const Label& l : labels_)
    if (l.delay < 0) throw Error(Errc::InvalidArgument, "delay blocks are non-negative");
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
}

TransitionSystem TransitionSystem::zero() { return TransitionSystem(1, 0, StateId{0}, {}, {}); }

StateId TransitionSystem::final_or_throw() const {
  if (!final_) throw Error(Errc::StateNotFound, "system has no final state");
  return *final_;
}

std::vector<Transition> TransitionSystem::out_transitions(StateId s) const {
  std::vector<Transition> out;
  auto lo = std::lower_bound(transitions_.begin(), transitions_.end(), Transition{s, 0, 0});
  for (auto it = lo; it != transitions_.end() && it->from == s; ++it) out.push_back(*it);
  return out;
}

TransitionSystem canonicalize(const TransitionSystem& t) {
  std::vector<Label> labels = t.labels();
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<LabelId> relabel(t.labels().size());
  for (std::size_t i = 0; i < t.labels().size(); ++i) {
    relabel[i] = static_cast<LabelId>(std::lower_bound(labels.begin(), labels.end(), t.labels()[i]) - labels.begin());
  }

  constexpr StateId kUnseen = static_cast<StateId>(-1);
  std::vector<StateId> renum(t.state_count(), kUnseen);
  StateId next = 0;
  std::deque<StateId> queue{t.initial()};
  renum[t.initial()] = next++;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    auto outs = t.out_transitions(s);
    std::sort(outs.begin(), outs.end(), [&](const Transition& a, const Transition& b) {
      return std::pair(relabel[a.label], a.to) < std::pair(relabel[b.label], b.to);
    });
    for (const Transition& tr : outs) {
      if (renum[tr.to] == kUnseen) {
        renum[tr.to] = next++;
        queue.push_back(tr.to);
      }
    }
  }
  for (StateId s = 0; s < t.state_count(); ++s)
    if (renum[s] == kUnseen) renum[s] = next++;

  std::vector<Transition> trans;
  trans.reserve(t.transitions().size());
  for (const Transition& tr : t.transitions()) trans.push_back({renum[tr.from], relabel[tr.label], renum[tr.to]});
  std::optional<StateId> fin;
  if (t.final_state()) fin = renum[*t.final_state()];
  return TransitionSystem(t.state_count(), renum[t.initial()], fin, std::move(labels), std::move(trans));
}

TransitionSystem coproduct(const TransitionSystem& a, const TransitionSystem& b) {
  const std::size_t n = a.state_count() + b.state_count() - 1;
  std::vector<StateId> ma(a.state_count()), mb(b.state_count());
  StateId next = 1;
  for (StateId s = 0; s < a.state_count(); ++s) ma[s] = (s == a.initial()) ? 0 : next++;
  for (StateId s = 0; s < b.state_count(); ++s) mb[s] = (s == b.initial()) ? 0 : next++;

  std::vector<Label> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  const LabelId off = a.labels().size();
  std::vector<Transition> trans;
  for (const Transition& t : a.transitions()) trans.push_back({ma[t.from], t.label, ma[t.to]});
  for (const Transition& t : b.transitions()) trans.push_back({mb[t.from], t.label + off, mb[t.to]});

  std::optional<StateId> fin;
  if (a.has_final() && b.has_final()) {
    const bool na = *a.final_state() != a.initial();
    const bool nb = *b.final_state() != b.initial();
    if (!(na && nb)) fin = na ? ma[*a.final_state()] : (nb ? mb[*b.final_state()] : 0);
  }
  return TransitionSystem(n, 0, fin, std::move(labels), std::move(trans));
}

TransitionSystem coproduct_final(const std::vector<TransitionSystem>& parts) {
  if (parts.empty()) throw Error(Errc::InvalidArgument, "empty coproduct");
  for (const auto& p : parts)
    if (!p.has_final()) throw Error(Errc::StateNotFound, "coproduct_final needs a final state on every summand");
  if (parts.size() == 1) return parts.front();

  std::vector<Label> labels;
  std::vector<Transition> trans;
  std::vector<StateId> finals;
  StateId next = 1;
  for (const auto& p : parts) {
    std::vector<StateId> m(p.state_count());
    for (StateId s = 0; s < p.state_count(); ++s) m[s] = (s == p.initial()) ? 0 : next++;
    const LabelId off = labels.size();
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    for (const Transition& t : p.transitions()) trans.push_back({m[t.from], t.label + off, m[t.to]});
    finals.push_back(m[*p.final_state()]);
  }
  const StateId join_final = next++;
  const LabelId join = labels.size();
  labels.push_back(Label{"join", 0});
  for (StateId f : finals) trans.push_back({f, join, join_final});
  return TransitionSystem(next, 0, join_final, std::move(labels), std::move(trans));
}

ProductSystem product(const TransitionSystem& a, const TransitionSystem& b, std::size_t max_states) {
  const std::size_t na = a.state_count(), nb = b.state_count();
  if (na * nb > max_states) {
    throw Error(Errc::ProductBudgetExceeded,
                std::to_string(na) + " x " + std::to_string(nb) + " states exceeds " + std::to_string(max_states));
  }
  ProductSystem out{TransitionSystem::zero(), {}};
  std::vector<Label> labels;
  // label index for component pair (ia, ib), index 0 meaning idle
  std::vector<std::vector<LabelId>> pair_label(a.labels().size() + 1, std::vector<LabelId>(b.labels().size() + 1, 0));
  for (std::size_t ia = 0; ia <= a.labels().size(); ++ia) {
    for (std::size_t ib = 0; ib <= b.labels().size(); ++ib) {
      if (ia == 0 && ib == 0) continue;
      const std::string la = ia ? a.labels()[ia - 1].name : "*";
      const std::string lb = ib ? b.labels()[ib - 1].name : "*";
      const int delay = std::max(ia ? a.labels()[ia - 1].delay : 0, ib ? b.labels()[ib - 1].delay : 0);
      pair_label[ia][ib] = labels.size();
      labels.push_back(Label{"(" + la + "," + lb + ")", delay});
      out.components.emplace_back(ia ? std::optional<LabelId>(ia - 1) : std::nullopt,
                                  ib ? std::optional<LabelId>(ib - 1) : std::nullopt);
    }
  }
  auto with_idles = [](const TransitionSystem& t) {
    // (from, label + 1, to), label 0 = idle
    std::vector<Transition> all;
    for (StateId s = 0; s < t.state_count(); ++s) all.push_back({s, 0, s});
    for (const Transition& tr : t.transitions()) all.push_back({tr.from, tr.label + 1, tr.to});
    return all;
  };
  const auto ta = with_idles(a), tb = with_idles(b);
  std::vector<Transition> trans;
  for (const Transition& x : ta) {
    for (const Transition& y : tb) {
      if (x.label == 0 && y.label == 0) continue;
      trans.push_back({x.from * nb + y.from, pair_label[x.label][y.label], x.to * nb + y.to});
    }
  }
  std::optional<StateId> fin;
  if (a.has_final() && b.has_final()) fin = *a.final_state() * nb + *b.final_state();
  out.system = TransitionSystem(na * nb, a.initial() * nb + b.initial(), fin, std::move(labels), std::move(trans));
  return out;
}

TransitionSystem graft(const TransitionSystem& a, StateId s, const TransitionSystem& b, StateId s2,
                       const Label& bridge) {
  if (s >= a.state_count()) throw Error(Errc::StateNotFound, "graft source state not in the first system");
  if (s2 >= b.state_count()) throw Error(Errc::StateNotFound, "graft target state not in the second system");
  const StateId off = a.state_count();
  std::vector<Label> labels = a.labels();
  const LabelId loff = labels.size();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  const LabelId bridge_id = labels.size();
  labels.push_back(bridge);
  std::vector<Transition> trans = a.transitions();
  for (const Transition& t : b.transitions()) trans.push_back({t.from + off, t.label + loff, t.to + off});
  trans.push_back({s, bridge_id, s2 + off});
  std::optional<StateId> fin = a.final_state();
  if (a.has_final() && s == *a.final_state() && s2 == b.initial() && b.has_final()) fin = *b.final_state() + off;
  return TransitionSystem(a.state_count() + b.state_count(), a.initial(), fin, std::move(labels), std::move(trans));
}

Label edge_label(EdgeId e, int delay) { return Label{"e" + std::to_string(e), delay}; }

namespace {

struct Bridge {
  std::size_t from_part;
  std::size_t to_part;
  Label label;
};

// Disjoint union of parts plus bridges from final states to initial states.
TransitionSystem assemble(const std::vector<const TransitionSystem*>& parts, const std::vector<Bridge>& bridges,
                          std::size_t initial_part, std::size_t final_part) {
  std::vector<StateId> offset(parts.size());
  std::size_t states = 0;
  std::vector<Label> labels;
  std::vector<Transition> trans;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset[i] = states;
    const LabelId loff = labels.size();
    labels.insert(labels.end(), parts[i]->labels().begin(), parts[i]->labels().end());
    for (const Transition& t : parts[i]->transitions())
      trans.push_back({t.from + states, t.label + loff, t.to + states});
    states += parts[i]->state_count();
  }
  for (const Bridge& b : bridges) {
    const LabelId id = labels.size();
    labels.push_back(b.label);
    trans.push_back({offset[b.from_part] + parts[b.from_part]->final_or_throw(), id,
                     offset[b.to_part] + parts[b.to_part]->initial()});
  }
  return TransitionSystem(states, offset[initial_part] + parts[initial_part]->initial(),
                          offset[final_part] + parts[final_part]->final_or_throw(), std::move(labels),
                          std::move(trans));
}

const TransitionSystem& part_of(const PartMap& parts, VertexId v) {
  auto it = parts.find(v);
  if (it == parts.end()) throw Error(Errc::InvalidArgument, "no part attached to vertex " + std::to_string(v));
  if (!it->second.has_final()) {
    throw Error(Errc::StateNotFound, "part at vertex " + std::to_string(v) + " has no final state");
  }
  return it->second;
}

int delay_of(const std::map<EdgeId, int>& delays, EdgeId e) {
  auto it = delays.find(e);
  return it == delays.end() ? 0 : it->second;
}

TransitionSystem graft_acyclic_impl(const DiGraph& g, const std::vector<VertexId>& order, const PartMap& parts,
                                    const std::map<EdgeId, int>& delays) {
  kahn_order(g);  // throws CycleDetected
  if (!is_topological_order(g, order)) throw Error(Errc::InvalidArgument, "order is not a topological order");
  if (order.empty()) throw Error(Errc::InvalidArgument, "empty graph");
  std::map<VertexId, std::size_t> slot;
  std::vector<const TransitionSystem*> ps;
  for (VertexId v : order) {
    slot[v] = ps.size();
    ps.push_back(&part_of(parts, v));
  }
  std::vector<Bridge> bridges;
  for (const Edge& e : g.edges()) bridges.push_back({slot[e.source], slot[e.target], edge_label(e.id, delay_of(delays, e.id))});
  return assemble(ps, bridges, 0, ps.size() - 1);
}

TransitionSystem graft_strong_impl(const DiGraph& g, const PartMap& parts, std::size_t max_summands,
                                   const std::map<EdgeId, int>& delays) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(Errc::InvalidArgument, "empty graph");
  if (tarjan_scc(g).size() != 1) throw Error(Errc::InvalidGraph, "graft_strong needs a strongly connected graph");
  if (n * n > max_summands) {
    throw Error(Errc::BudgetExceeded,
                std::to_string(n * n) + " summands exceed the budget of " + std::to_string(max_summands));
  }
  std::map<VertexId, std::size_t> slot;
  std::vector<const TransitionSystem*> ps;
  for (VertexId v : g.vertices()) {
    slot[v] = ps.size();
    ps.push_back(&part_of(parts, v));
  }
  std::vector<Bridge> bridges;
  for (const Edge& e : g.edges()) bridges.push_back({slot[e.source], slot[e.target], edge_label(e.id, delay_of(delays, e.id))});
  std::vector<TransitionSystem> summands;
  for (std::size_t in = 0; in < n; ++in)
    for (std::size_t out = 0; out < n; ++out) summands.push_back(assemble(ps, bridges, in, out));
  return coproduct_final(summands);
}

// Kahn order of a DAG whose vertices carry a sort key; smallest key first.
std::vector<std::size_t> kahn_by_key(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& arcs,
                                     const std::vector<VertexId>& key) {
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : arcs) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  using Item = std::pair<VertexId, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.emplace(key[i], i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = ready.top().second;
    ready.pop();
    order.push_back(i);
    for (std::size_t j : succ[i])
      if (--indeg[j] == 0) ready.emplace(key[j], j);
  }
  if (order.size() != n) throw Error(Errc::CycleDetected, "quotient graph has a cycle");
  return order;
}

// Grafts per-group systems along the quotient by `groups`, one bridge per
// inter-group edge.
TransitionSystem graft_groups(const DiGraph& g, const std::vector<std::vector<VertexId>>& groups,
                              const std::vector<TransitionSystem>& systems, const std::map<EdgeId, int>& delays) {
  std::map<VertexId, std::size_t> group_of;
  std::vector<VertexId> key(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    key[i] = *std::min_element(groups[i].begin(), groups[i].end());
    for (VertexId v : groups[i]) group_of[v] = i;
  }
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  for (const Edge& e : g.edges()) {
    const std::size_t a = group_of.at(e.source), b = group_of.at(e.target);
    if (a != b) arcs.emplace(a, b);
  }
  const auto order = kahn_by_key(groups.size(), arcs, key);
  std::vector<std::size_t> slot(groups.size());
  std::vector<const TransitionSystem*> ps;
  for (std::size_t i : order) {
    slot[i] = ps.size();
    ps.push_back(&systems[i]);
  }
  std::vector<Bridge> bridges;
  for (const Edge& e : g.edges()) {
    const std::size_t a = group_of.at(e.source), b = group_of.at(e.target);
    if (a != b) bridges.push_back({slot[a], slot[b], edge_label(e.id, delay_of(delays, e.id))});
  }
  return assemble(ps, bridges, 0, ps.size() - 1);
}

}  // namespace

TransitionSystem graft_acyclic(const DiGraph& g, const std::vector<VertexId>& order, const PartMap& parts) {
  return graft_acyclic_impl(g, order, parts, {});
}

TransitionSystem graft_strong(const DiGraph& g, const PartMap& parts, std::size_t max_summands) {
  return graft_strong_impl(g, parts, max_summands, {});
}

TransitionSystem xi(const DiGraph& g, const PartMap& parts, std::size_t max_summands) {
  if (g.vertex_count() == 0) throw Error(Errc::InvalidArgument, "empty graph");
  const auto components = tarjan_scc(g);
  std::vector<TransitionSystem> systems;
  for (const auto& comp : components) {
    systems.push_back(graft_strong_impl(g.induced_subgraph(comp), parts, max_summands, {}));
  }
  return graft_groups(g, components, systems, {});
}

DelayedGraph build_delayed_graph(const DiGraph& g, const DistributedStructure& ds) {
  DelayedGraph out;
  const std::size_t m = ds.machines.size();
  if (m == 0) throw Error(Errc::InvalidArgument, "no machines");
  for (std::size_t i = 0; i < m; ++i) {
    if (ds.machines[i].empty()) throw Error(Errc::InvalidArgument, "empty machine");
    for (VertexId v : ds.machines[i]) {
      if (!g.has_vertex(v)) throw Error(Errc::InvalidArgument, "machine vertex " + std::to_string(v) + " not in graph");
      if (!out.machine_of.emplace(v, i).second) {
        throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " in two machines");
      }
    }
  }
  if (out.machine_of.size() != g.vertex_count()) throw Error(Errc::InvalidArgument, "machines do not cover the graph");

  std::vector<VertexId> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : edges) out.delay[e.id] = 0;
  VertexId next_vertex = g.max_vertex_id() + 1;
  EdgeId next_edge = g.max_edge_id() + 1;
  auto hub = [&](std::size_t machine) {
    if (machine >= m) throw Error(Errc::InvalidArgument, "hub edge names an unknown machine");
    auto it = out.hub_of.find(machine);
    if (it != out.hub_of.end()) return it->second;
    const VertexId h = next_vertex++;
    vertices.push_back(h);
    out.hub_of[machine] = h;
    out.machine_of[h] = machine;
    return h;
  };
  for (const HubEdge& he : ds.hub_in) {
    if (!g.has_vertex(he.vertex)) throw Error(Errc::InvalidArgument, "hub edge from unknown vertex");
    if (he.delay < 0) throw Error(Errc::InvalidArgument, "delays are non-negative");
    const VertexId h = hub(he.machine);
    edges.push_back(Edge{next_edge, he.vertex, h});
    out.delay[next_edge++] = he.delay;
  }
  for (const HubEdge& he : ds.hub_out) {
    if (!g.has_vertex(he.vertex) || out.machine_of.at(he.vertex) != he.machine) {
      throw Error(Errc::InvalidArgument, "hub out-edge must target a vertex of its own machine");
    }
    if (he.delay < 0) throw Error(Errc::InvalidArgument, "delays are non-negative");
    const VertexId h = hub(he.machine);
    edges.push_back(Edge{next_edge, h, he.vertex});
    out.delay[next_edge++] = he.delay;
  }
  out.graph = DiGraph(std::move(vertices), std::move(edges));
  return out;
}

TransitionSystem xi_t(const DiGraph& g, const DistributedStructure& ds, const PartMap& parts,
                      std::size_t max_summands) {
  const DelayedGraph dg = build_delayed_graph(g, ds);
  PartMap all = parts;
  for (const auto& [machine, h] : dg.hub_of) all.emplace(h, TransitionSystem::zero());

  std::vector<std::vector<VertexId>> groups(ds.machines.size());
  for (const auto& [v, i] : dg.machine_of) groups[i].push_back(v);
  std::vector<TransitionSystem> systems;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const DiGraph sub = dg.graph.induced_subgraph(groups[i]);
    if (tarjan_scc(sub).size() != 1) {
      throw Error(Errc::MachineNotStronglyConnected, "machine " + std::to_string(i) + " is not strongly connected");
    }
    systems.push_back(graft_strong_impl(sub, all, max_summands, dg.delay));
  }
  try {
    return graft_groups(dg.graph, groups, systems, dg.delay);
  } catch (const Error& e) {
    if (e.code() == Errc::CycleDetected) throw Error(Errc::CondensationNotAcyclic, "machine quotient has a cycle");
    throw;
  }
}

std::vector<RunWord> language_words(const TransitionSystem& t, std::size_t n, std::size_t max_words) {
  std::vector<RunWord> out;
  RunWord current;
  std::function<void(StateId)> walk = [&](StateId s) {
    if (current.size() == n) {
      if (out.size() >= max_words) {
        throw Error(Errc::EnumerationBudgetExceeded, "more than " + std::to_string(max_words) + " words");
      }
      out.push_back(current);
      return;
    }
    current.push_back(Step{s, std::nullopt, s});
    walk(s);
    current.pop_back();
    for (const Transition& tr : t.out_transitions(s)) {
      current.push_back(Step{s, tr.label, tr.to});
      walk(tr.to);
      current.pop_back();
    }
  };
  walk(t.initial());
  return out;
}

std::vector<LabelId> visible_labels(const RunWord& w) {
  std::vector<LabelId> out;
  for (const Step& s : w)
    if (s.label) out.push_back(*s.label);
  return out;
}

Code extract_code(const TransitionSystem& t, std::size_t n, std::size_t max_words) {
  if (n == 0) throw Error(Errc::InvalidArgument, "code length must be positive");
  std::set<Word> words;
  for (const RunWord& w : language_words(t, n, max_words)) {
    Word c(n, 0);
    for (std::size_t i = 0; i < n; ++i) c[i] = w[i].label ? 1 : 0;
    words.insert(std::move(c));
  }
  return Code(static_cast<int>(n), 2, std::vector<Word>(words.begin(), words.end()));
}

std::vector<std::string> time_substring(const TransitionSystem& t, const RunWord& w, int time, DelayMode mode) {
  std::vector<std::string> out;
  for (const Step& s : w) {
    if (!s.label) continue;
    const Label& l = t.labels().at(*s.label);
    if (mode == DelayMode::Exact ? l.delay == time : l.delay <= time) out.push_back(l.name);
  }
  return out;
}

bool is_ts_morphism(const std::vector<StateId>& sigma, const std::vector<std::optional<LabelId>>& lambda,
                    const TransitionSystem& a, const TransitionSystem& b) {
  if (sigma.size() != a.state_count() || lambda.size() != a.labels().size()) {
    throw Error(Errc::DimensionMismatch, "morphism data must cover every state and label");
  }
  for (StateId s : sigma)
    if (s >= b.state_count()) return false;
  if (sigma[a.initial()] != b.initial()) return false;
  for (const Transition& t : a.transitions()) {
    const auto& l = lambda[t.label];
    if (!l) {
      if (sigma[t.from] != sigma[t.to]) return false;
      continue;
    }
    if (!std::binary_search(b.transitions().begin(), b.transitions().end(), Transition{sigma[t.from], *l, sigma[t.to]})) {
      return false;
    }
  }
  return true;
}

}  // namespace catnet
