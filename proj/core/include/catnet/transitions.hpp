#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catnet/codes.hpp"
#include "catnet/graph.hpp"

namespace catnet {

using StateId = std::size_t;
using LabelId = std::size_t;

struct Label {
  std::string name;
  int delay = 0;  // time-delay block, 0 outside the delayed subcategory

  friend auto operator<=>(const Label&, const Label&) = default;
};

struct Transition {
  StateId from = 0;
  LabelId label = 0;
  StateId to = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Transition system on states 0..n-1. Labels are identified by index, so
/// two labels may share a name (coproducts keep disjoint copies). The idle
/// transition (s, *, s) exists at every state and is never stored.
class TransitionSystem {
 public:
  TransitionSystem(std::size_t states, StateId initial, std::optional<StateId> final_state,
                   std::vector<Label> labels, std::vector<Transition> transitions);

  /// Stationary single-state system: the zero object, with final = initial.
  static TransitionSystem zero();

  std::size_t state_count() const noexcept { return states_; }
  StateId initial() const noexcept { return initial_; }
  const std::optional<StateId>& final_state() const noexcept { return final_; }
  /// True when a unique final state is present.
  bool has_final() const noexcept { return final_.has_value(); }
  StateId final_or_throw() const;
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  std::vector<Transition> out_transitions(StateId s) const;

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;

 private:
  std::size_t states_;
  StateId initial_;
  std::optional<StateId> final_;
  std::vector<Label> labels_;
  std::vector<Transition> transitions_;  // sorted, unique
};

/// Renumbers states in BFS order from the initial state (out-transitions
/// visited by label then target), then unreached states in their old order.
/// Labels are sorted and merged by (name, delay).
TransitionSystem canonicalize(const TransitionSystem& t);

/// Coproduct: initial states identified, labels kept as disjoint copies.
/// State layout: shared initial, then S1 minus its initial, then S2 minus its
/// initial. A final state is kept when at most one summand has a final state
/// distinct from its initial state.
TransitionSystem coproduct(const TransitionSystem& a, const TransitionSystem& b);

/// Coproduct in the subcategory with final states: every summand's final
/// state gets a "join" transition into one fresh common final state. A single
/// summand is returned unchanged.
TransitionSystem coproduct_final(const std::vector<TransitionSystem>& parts);

struct ProductSystem {
  TransitionSystem system;
  /// Per product label, the component label on each axis (nullopt = idle).
  std::vector<std::pair<std::optional<LabelId>, std::optional<LabelId>>> components;
};

/// Synchronous product with idle pairs; state (s1, s2) has index
/// s1 * |S2| + s2. Throws ProductBudgetExceeded above max_states.
ProductSystem product(const TransitionSystem& a, const TransitionSystem& b, std::size_t max_states = 4096);

/// Disjoint union plus one bridge (s, bridge, s2). States of b are shifted by
/// |S_a|. If s is a's final state, s2 is b's initial state and b has a final
/// state, the result's final state is b's; otherwise a's.
TransitionSystem graft(const TransitionSystem& a, StateId s, const TransitionSystem& b, StateId s2,
                       const Label& bridge = Label{"e", 0});

/// Per vertex, the computational part attached to it.
using PartMap = std::map<VertexId, TransitionSystem>;

/// Label used for the bridge of edge e.
Label edge_label(EdgeId e, int delay = 0);

/// Grafting along an acyclic graph: parts placed in `order`, bridges
/// (q_s(e), e, iota_t(e)) for every edge, initial of the first vertex, final
/// of the last. Throws CycleDetected on a cyclic graph.
TransitionSystem graft_acyclic(const DiGraph& g, const std::vector<VertexId>& order, const PartMap& parts);

/// Coproduct over all (v_in, v_out) of the grafted system with initial
/// iota_{v_in} and final q_{v_out}; each summand has its own copy of every
/// part. Throws BudgetExceeded when |V|^2 exceeds max_summands.
TransitionSystem graft_strong(const DiGraph& g, const PartMap& parts, std::size_t max_summands = 64);

/// Strongly connected pieces via graft_strong, then grafting along the
/// condensation in Kahn order with one bridge per original inter-component edge.
TransitionSystem xi(const DiGraph& g, const PartMap& parts, std::size_t max_summands = 64);

struct HubEdge {
  VertexId vertex = 0;
  std::size_t machine = 0;
  int delay = 1;
};

/// Machines partition the vertices. Hub in-edges run from a vertex to the
/// hub of a machine, hub out-edges from the hub of a machine to one of its
/// own vertices. A hub exists only for machines that have hub edges.
struct DistributedStructure {
  std::vector<std::vector<VertexId>> machines;
  std::vector<HubEdge> hub_in;
  std::vector<HubEdge> hub_out;
};

/// Extended graph with hub vertices and per-edge delays (0 on original edges).
struct DelayedGraph {
  DiGraph graph;
  std::map<EdgeId, int> delay;
  std::map<VertexId, std::size_t> machine_of;
  std::map<std::size_t, VertexId> hub_of;
};

DelayedGraph build_delayed_graph(const DiGraph& g, const DistributedStructure& ds);

/// Throws MachineNotStronglyConnected or CondensationNotAcyclic when the
/// structure is outside the admissible class. Hub vertices get the zero part.
TransitionSystem xi_t(const DiGraph& g, const DistributedStructure& ds, const PartMap& parts,
                      std::size_t max_summands = 64);

/// One step of a run; label nullopt is the idle transition.
struct Step {
  StateId from = 0;
  std::optional<LabelId> label;
  StateId to = 0;

  friend auto operator<=>(const Step&, const Step&) = default;
};
using RunWord = std::vector<Step>;

/// All runs of exactly n steps from the initial state, idle steps included,
/// in lexicographic order (idle first, then label id, then target).
std::vector<RunWord> language_words(const TransitionSystem& t, std::size_t n, std::size_t max_words = 1'000'000);

/// Label sequence of a run, idle steps removed.
std::vector<LabelId> visible_labels(const RunWord& w);

/// c(w)_i = 0 iff step i is idle; duplicates collapsed; n >= 1.
Code extract_code(const TransitionSystem& t, std::size_t n, std::size_t max_words = 1'000'000);

enum class DelayMode {
  Exact,  // labels whose delay block equals t
  UpTo,   // labels whose delay block is at most t
};

/// Names of the non-idle labels of the run selected by delay block.
std::vector<std::string> time_substring(const TransitionSystem& t, const RunWord& w, int time,
                                        DelayMode mode = DelayMode::Exact);

/// sigma: state map a -> b; lambda: label map a -> b, nullopt sends a label
/// to idle. Checks initial states and that transitions map to transitions.
bool is_ts_morphism(const std::vector<StateId>& sigma, const std::vector<std::optional<LabelId>>& lambda,
                    const TransitionSystem& a, const TransitionSystem& b);

/// Integrate-and-fire automaton: membrane levels 0..levels, initial 0,
/// final `levels`; "excite" k -> k+1, optional "leak" k -> k-1, "spike"
/// resets the top level to 0.
TransitionSystem integrate_and_fire(int levels, bool leak = false);

}  // namespace catnet
