#include <algorithm>
#include <set>

#include "catnet/error.hpp"
#include "catnet/rng.hpp"
#include "catnet/transitions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catnet;

namespace {

DiGraph from_arcs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
  DiGraph g = DiGraph::with_vertices(n);
  for (auto [a, b] : arcs) g.add_edge(a, b);
  return g;
}

TransitionSystem one_step(const std::string& name) {
  return TransitionSystem(2, 0, 1, {Label{name, 0}}, {Transition{0, 0, 1}});
}

std::set<std::vector<std::string>> visible_names(const TransitionSystem& t, std::size_t n) {
  std::set<std::vector<std::string>> out;
  for (const RunWord& w : language_words(t, n)) {
    std::vector<std::string> names;
    for (LabelId l : visible_labels(w)) names.push_back(t.labels()[l].name);
    out.insert(names);
  }
  return out;
}

std::set<std::string> code_words(const Code& c) {
  std::set<std::string> out;
  for (const Word& w : c.words()) out.insert(to_string(w));
  return out;
}

PartMap fire_parts(const DiGraph& g) {
  PartMap parts;
  for (VertexId v : g.vertices()) parts.emplace(v, integrate_and_fire(1));
  return parts;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(TransitionSystem(2, 2, std::nullopt, {}, {}), Error);
  CHECK_THROWS_AS(TransitionSystem(2, 0, 5, {}, {}), Error);
  CHECK_THROWS_AS(TransitionSystem(2, 0, std::nullopt, {Label{"a", 0}}, {Transition{0, 1, 1}}), Error);
  CHECK_THROWS_AS(TransitionSystem::zero().final_or_throw() + TransitionSystem(1, 0, std::nullopt, {}, {}).final_or_throw(),
                  Error);
}

TEST_CASE("coproduct") {
  const TransitionSystem t = one_step("a");
  CHECK(canonicalize(coproduct(t, TransitionSystem::zero())) == canonicalize(t));
  const TransitionSystem ab = coproduct(one_step("a"), one_step("b"));
  CHECK(ab.state_count() == 3);
  CHECK(visible_names(ab, 1) == std::set<std::vector<std::string>>{{}, {"a"}, {"b"}});
  const TransitionSystem big = coproduct(integrate_and_fire(3), integrate_and_fire(2, true));
  CHECK(big.state_count() == 4 + 3 - 1);
}

TEST_CASE("coproduct law fails once a summand re-enters its initial state") {
  // a loops back to the initial state, so after the shared initial state is
  // reached again the other summand's transitions become available
  const TransitionSystem loop(2, 0, std::nullopt, {Label{"a", 0}, Label{"r", 0}},
                              {Transition{0, 0, 1}, Transition{1, 1, 0}});
  const TransitionSystem b = one_step("b");
  const auto words = visible_names(coproduct(loop, b), 3);
  CHECK(words.count({"a", "r", "b"}) == 1);
  CHECK(visible_names(loop, 3).count({"a", "r", "b"}) == 0);
  CHECK(visible_names(b, 3).count({"a", "r", "b"}) == 0);
}

TEST_CASE("product") {
  const ProductSystem z = product(one_step("a"), TransitionSystem::zero());
  CHECK(z.system.state_count() == 2);
  CHECK(visible_names(z.system, 2).size() == visible_names(one_step("a"), 2).size());

  const ProductSystem p = product(one_step("a"), one_step("b"));
  CHECK(p.system.state_count() == 4);
  std::set<std::pair<std::optional<LabelId>, std::optional<LabelId>>> comps(p.components.begin(), p.components.end());
  CHECK(comps.count({0, 0}) == 1);             // synchronised (a, b)
  CHECK(comps.count({0, std::nullopt}) == 1);  // a while b idles
  CHECK(comps.count({std::nullopt, 0}) == 1);
  CHECK(product(integrate_and_fire(1), integrate_and_fire(2)).system.state_count() == 6);
  CHECK_THROWS_AS(product(integrate_and_fire(9), integrate_and_fire(9), 50), Error);
}

TEST_CASE("graft") {
  const TransitionSystem g = graft(one_step("a"), 1, one_step("b"), 0, Label{"e", 0});
  CHECK(g.state_count() == 4);
  CHECK(g.final_state() == std::optional<StateId>{3});
  CHECK(visible_names(g, 3).count({"a", "e", "b"}) == 1);
  const TransitionSystem z = graft(one_step("a"), 0, TransitionSystem::zero(), 0);
  CHECK(z.state_count() == 3);
  CHECK(z.transitions().size() == 2);
  CHECK_THROWS_AS(graft(one_step("a"), 7, one_step("b"), 0), Error);
}

TEST_CASE("acyclic grafting") {
  const DiGraph path = from_arcs(2, {{0, 1}});
  const PartMap parts = {{0, one_step("a")}, {1, one_step("b")}};
  const std::vector<VertexId> order = {0, 1};
  const TransitionSystem p = graft_acyclic(path, order, parts);
  CHECK(canonicalize(p) == canonicalize(graft(one_step("a"), 1, one_step("b"), 0, edge_label(0))));

  const DiGraph diamond = from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  PartMap dp;
  for (VertexId v = 0; v < 4; ++v) dp.emplace(v, one_step("n" + std::to_string(v)));
  const std::vector<VertexId> dorder = {0, 1, 2, 3};
  const TransitionSystem d = graft_acyclic(diamond, dorder, dp);
  std::size_t bridges = 0;
  for (const Transition& t : d.transitions()) bridges += d.labels()[t.label].name[0] == 'e';
  CHECK(bridges == 4);
  for (const auto& w : visible_names(d, 7)) {
    const bool via1 = std::find(w.begin(), w.end(), "n1") != w.end();
    const bool via2 = std::find(w.begin(), w.end(), "n2") != w.end();
    CHECK_FALSE((via1 && via2));
  }
  CHECK(visible_names(d, 7).count({"n0", "e0", "n1", "e2", "n3"}) == 1);
  CHECK_THROWS_AS(graft_acyclic(from_arcs(2, {{0, 1}, {1, 0}}), order, parts), Error);
}

TEST_CASE("strongly connected grafting") {
  const DiGraph one = DiGraph::with_vertices(1);
  CHECK(graft_strong(one, {{0, integrate_and_fire(2)}}) == integrate_and_fire(2));

  const DiGraph cyc = from_arcs(2, {{0, 1}, {1, 0}});
  const TransitionSystem s = graft_strong(cyc, fire_parts(cyc));
  // shared initial, four summands of two 2-state parts, one common final
  CHECK(s.state_count() == 1 + 4 * 3 + 1);
  std::size_t joins = 0;
  for (const Transition& t : s.transitions()) joins += s.labels()[t.label].name == "join";
  CHECK(joins == 4);
  // some word goes round the cycle and finishes at the same part
  bool round_trip = false;
  for (const auto& w : visible_names(s, 8)) {
    const auto e0 = std::find(w.begin(), w.end(), "e0");
    round_trip = round_trip || (e0 != w.end() && std::find(e0, w.end(), "e1") != w.end() && w.back() == "join");
  }
  CHECK(round_trip);
  CHECK_THROWS_AS(graft_strong(from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}), fire_parts(DiGraph::with_vertices(3)), 4), Error);
  CHECK_THROWS_AS(graft_strong(from_arcs(2, {{0, 1}}), fire_parts(cyc)), Error);
}

TEST_CASE("xi reduces to its pieces") {
  const DiGraph dag = from_arcs(3, {{0, 1}, {1, 2}});
  const PartMap parts = fire_parts(dag);
  const auto order = kahn_order(dag);
  CHECK(canonicalize(xi(dag, parts)) == canonicalize(graft_acyclic(dag, order, parts)));
  const DiGraph cyc = from_arcs(2, {{0, 1}, {1, 0}});
  CHECK(canonicalize(xi(cyc, fire_parts(cyc))) == canonicalize(graft_strong(cyc, fire_parts(cyc))));
}

TEST_CASE("xi on a path is the bridged concatenation of the parts") {
  const DiGraph path = from_arcs(3, {{0, 1}, {1, 2}});
  const PartMap parts = {{0, one_step("a")}, {1, one_step("b")}, {2, one_step("c")}};
  const auto words = visible_names(xi(path, parts), 6);
  std::set<std::vector<std::string>> prefixes;
  const std::vector<std::string> full = {"a", "e0", "b", "e1", "c"};
  for (std::size_t k = 0; k <= full.size(); ++k) prefixes.insert({full.begin(), full.begin() + static_cast<long>(k)});
  CHECK(words == prefixes);
}

TEST_CASE("canonical form is idempotent") {
  Rng rng(8);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + rng.below(5);
    std::vector<Transition> ts;
    for (std::size_t i = 0; i < 2 * n; ++i) ts.push_back({rng.below(n), rng.below(2), rng.below(n)});
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const TransitionSystem t(n, rng.below(n), std::nullopt, {Label{"x", 0}, Label{"y", 0}}, ts);
    CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
  }
}

TEST_CASE("distributed structures") {
  const DiGraph cyc = from_arcs(2, {{0, 1}, {1, 0}});
  const DistributedStructure whole{{{0, 1}}, {}, {}};
  CHECK(canonicalize(xi_t(cyc, whole, fire_parts(cyc))) == canonicalize(xi(cyc, fire_parts(cyc))));

  // two machines {0,1} and {2,3}; vertex 1 feeds the hub of machine 1 with delay 3,
  // vertex 3 closes the hub into its own machine
  const DiGraph g = from_arcs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  const DistributedStructure ds{{{0, 1}, {2, 3}}, {HubEdge{1, 1, 3}, HubEdge{3, 1, 1}}, {HubEdge{2, 1, 0}}};
  const DelayedGraph dg = build_delayed_graph(g, ds);
  CHECK(dg.graph.vertex_count() == 5);
  CHECK(dg.graph.edge_count() == 7);
  std::size_t delayed = 0;
  for (const auto& [e, d] : dg.delay) delayed += d == 3;
  CHECK(delayed == 1);
  const TransitionSystem t = xi_t(g, ds, fire_parts(g));
  std::size_t delay3 = 0;
  for (const Label& l : t.labels()) delay3 += l.delay == 3;
  CHECK(delay3 == 1);

  const DistributedStructure split{{{0}, {1}}, {}, {}};
  try {
    xi_t(cyc, split, fire_parts(cyc));
    FAIL("expected CondensationNotAcyclic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CondensationNotAcyclic);
  }
  const DistributedStructure loose{{{0, 1}}, {}, {}};
  try {
    xi_t(from_arcs(2, {{0, 1}}), loose, fire_parts(cyc));
    FAIL("expected MachineNotStronglyConnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MachineNotStronglyConnected);
  }
}

TEST_CASE("time substrings follow the delay blocks") {
  const TransitionSystem t(3, 0, 2, {Label{"fast", 0}, Label{"slow", 2}},
                           {Transition{0, 0, 1}, Transition{1, 1, 2}});
  const auto words = language_words(t, 2);
  const RunWord& both = words.back();
  REQUIRE(visible_labels(both).size() == 2);
  CHECK(time_substring(t, both, 0) == std::vector<std::string>{"fast"});
  CHECK(time_substring(t, both, 2) == std::vector<std::string>{"slow"});
  CHECK(time_substring(t, both, 1, DelayMode::UpTo) == std::vector<std::string>{"fast"});
  CHECK(time_substring(t, both, 2, DelayMode::UpTo) == std::vector<std::string>{"fast", "slow"});
}

TEST_CASE("language enumeration") {
  CHECK(language_words(one_step("a"), 0).size() == 1);
  CHECK(language_words(TransitionSystem::zero(), 4).size() == 1);
  const auto words = language_words(one_step("a"), 2);
  CHECK(words.size() == 3);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(language_words(integrate_and_fire(2, true), n).size() == oracle::runs(integrate_and_fire(2, true), n).size());
  CHECK_THROWS_AS(language_words(integrate_and_fire(3, true), 30, 1000), Error);
}

TEST_CASE("code extraction") {
  CHECK(code_words(extract_code(TransitionSystem::zero(), 3)) == std::set<std::string>{"000"});
  const Code c = extract_code(one_step("a"), 2);
  CHECK(code_words(c) == std::set<std::string>{"00", "01", "10"});
  CHECK(c.size() == 3);
  // adding a transition never removes a codeword
  Rng rng(4);
  for (int k = 0; k < 30; ++k) {
    std::vector<Transition> ts;
    for (int i = 0; i < 3; ++i) ts.push_back({rng.below(3), 0, rng.below(3)});
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const TransitionSystem small(3, 0, std::nullopt, {Label{"x", 0}}, ts);
    ts.push_back({rng.below(3), 0, rng.below(3)});
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const TransitionSystem bigger(3, 0, std::nullopt, {Label{"x", 0}}, ts);
    const auto a = code_words(extract_code(small, 4));
    const auto b = code_words(extract_code(bigger, 4));
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("morphism validator") {
  const TransitionSystem a = one_step("a");
  CHECK(is_ts_morphism({0, 1}, {0}, a, a));
  CHECK(is_ts_morphism({0, 0}, {std::nullopt}, a, a));  // collapse to idle
  CHECK_FALSE(is_ts_morphism({1, 0}, {0}, a, a));        // initial not preserved
  CHECK_FALSE(is_ts_morphism({0, 0}, {0}, a, a));        // (0, a, 0) is not a transition
}

TEST_CASE("integrate and fire automaton") {
  const TransitionSystem t = integrate_and_fire(3, true);
  CHECK(t.state_count() == 4);
  CHECK(t.final_state() == std::optional<StateId>{3});
  CHECK(visible_names(t, 4).count({"excite", "excite", "excite", "spike"}) == 1);
  CHECK(visible_names(t, 2).count({"excite", "leak"}) == 1);
  CHECK_THROWS_AS(integrate_and_fire(0), Error);
}
