#include <cmath>

#include "catnet/codes.hpp"
#include "catnet/error.hpp"
#include "catnet/hopfield.hpp"
#include "catnet/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catnet;

namespace {

DiGraph from_arcs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
  DiGraph g = DiGraph::with_vertices(n);
  for (auto [a, b] : arcs) g.add_edge(a, b);
  return g;
}

WeightedCode single(const char* word, double w) {
  const std::string z(std::string(word).size(), '0');
  return WeightedCode(Code::from_strings(2, {z, word}), {0.0, w});
}

std::size_t nonzero_instances(const WeightedCode& c) { return c.size() - 1; }

HopfieldSystem random_inhibitory(std::uint64_t seed, std::size_t max_vertices, HopfieldOptions opts,
                                 HopfieldState& init) {
  Rng rng(seed);
  DiGraph g = gen_erdos_renyi(2 + rng.below(max_vertices - 1), 0.5, seed);
  if (g.edge_count() == 0) g.add_edge(0, 1);
  const std::size_t m = g.edge_count();
  std::vector<double> t(m * m);
  for (double& x : t) x = rng.uniform(-1.0, -0.05);
  std::vector<WeightedCode> theta;
  init.x.clear();
  for (std::size_t e = 0; e < m; ++e) {
    theta.push_back(single(rng.bernoulli(0.5) ? "1010" : "0110", rng.uniform(0.2, 1.0)));
    init.x.push_back(single(rng.bernoulli(0.5) ? "1000" : "0011", rng.uniform(0.1, 1.0)));
  }
  opts.inhibitory = true;
  return HopfieldSystem(g, t, theta, opts);
}

}  // namespace

TEST_CASE("zero coupling and zero input") {
  const DiGraph g = from_arcs(2, {{0, 1}, {1, 0}});
  const std::vector<WeightedCode> theta(2, WeightedCode::zero(3));
  const HopfieldState s0{{single("110", 1.0), single("011", 2.0)}, 0};
  HopfieldOptions self;
  const HopfieldSystem a(g, std::vector<double>(4, 0.0), theta, self);
  const HopfieldState s1 = step_categorical(a, s0);
  CHECK(equivalent(s1.x[0], s0.x[0], 0.0));
  CHECK(equivalent(s1.x[1], s0.x[1], 0.0));
  CHECK(s1.step == 1);
  CHECK(verify_reduction(a, s0, 10) == 0.0);

  HopfieldOptions pure;
  pure.variant = HopfieldVariant::Pure;
  const HopfieldSystem b(g, std::vector<double>(4, 0.0), theta, pure);
  const HopfieldState p1 = step_categorical(b, s0);
  CHECK(total_weight(p1.x[0]) == 0.0);
  CHECK(canonical_form(p1.x[1]).empty());
}

TEST_CASE("single loop with an open gate") {
  const DiGraph g = from_arcs(1, {{0, 0}});
  const HopfieldSystem sys(g, {-0.5}, {single("10", 1.0)});
  const HopfieldState s0{{single("01", 1.0)}, 0};
  const HopfieldState s1 = step_categorical(sys, s0);
  CHECK(total_weight(s1.x[0]) == doctest::Approx(1.5));
  CHECK(step_classical(sys, {1.0})[0] == doctest::Approx(1.5));
  // appended summand: the scaled state words wedge the input words
  const auto cf = canonical_form(s1.x[0]);
  REQUIRE(cf.size() == 2);
  CHECK(to_string(cf[0].first) == "01");
  CHECK(cf[0].second == doctest::Approx(0.5));
  CHECK(to_string(cf[1].first) == "10");
  CHECK(cf[1].second == doctest::Approx(1.0));
  CHECK(nonzero_instances(s1.x[0]) == 3);
}

TEST_CASE("closed gate leaves the weight unchanged") {
  const DiGraph g = from_arcs(1, {{0, 0}});
  const HopfieldSystem sys(g, {-2.0}, {single("10", 1.0)});
  CHECK(step_classical(sys, {1.0})[0] == 1.0);
  const HopfieldState s1 = step_categorical(sys, HopfieldState{{single("01", 1.0)}, 0});
  CHECK(total_weight(s1.x[0]) == 1.0);
  CHECK(nonzero_instances(s1.x[0]) == 1);
}

TEST_CASE("two-edge cycle by hand") {
  const DiGraph g = from_arcs(2, {{0, 1}, {1, 0}});
  HopfieldOptions opts;
  opts.inhibitory = true;
  const HopfieldSystem sys(g, {-0.5, -0.25, -0.25, -0.5}, {single("110", 1.0), single("011", 1.0)}, opts);
  const auto a1 = step_classical(sys, {1.0, 1.0});
  CHECK(a1[0] == doctest::Approx(1.25));
  CHECK(a1[1] == doctest::Approx(1.25));
  const HopfieldState s0{{single("100", 1.0), single("001", 1.0)}, 0};
  const Trajectory traj = run(sys, s0, 6);
  CHECK(traj.alpha[1][0] == doctest::Approx(1.25));
  CHECK(traj.alpha[1][1] == doctest::Approx(1.25));
  CHECK(verify_reduction(sys, s0, 12) <= 1e-12);
}

TEST_CASE("positive homogeneity of the classical step") {
  const DiGraph g = from_arcs(2, {{0, 1}, {1, 0}});
  const std::vector<double> t = {-0.3, 0.2, 0.1, -0.4};
  const HopfieldSystem a(g, t, {single("10", 0.7), single("01", 0.4)});
  const double c = 2.5;
  const HopfieldSystem b(g, t, {single("10", 0.7 * c), single("01", 0.4 * c)});
  const std::vector<double> alpha = {1.0, 2.0};
  const auto ia = step_classical(a, alpha);
  const auto ib = step_classical(b, {alpha[0] * c, alpha[1] * c});
  for (int e = 0; e < 2; ++e) CHECK(ib[e] - alpha[e] * c == doctest::Approx(c * (ia[e] - alpha[e])));
}

TEST_CASE("run with no steps returns the initial state") {
  const DiGraph g = from_arcs(1, {{0, 0}});
  const HopfieldSystem sys(g, {-0.5}, {single("10", 1.0)});
  const HopfieldState s0{{single("01", 1.0)}, 0};
  const Trajectory traj = run(sys, s0, 0);
  CHECK(traj.states.size() == 1);
  CHECK(traj.alpha == std::vector<std::vector<double>>{{1.0}});
}

TEST_CASE("validation") {
  const DiGraph g = from_arcs(2, {{0, 1}, {1, 0}});
  const std::vector<WeightedCode> theta = {single("10", 1.0), single("01", 1.0)};
  CHECK_THROWS_AS(HopfieldSystem(g, {-1.0, -1.0, -1.0}, theta), Error);
  CHECK_THROWS_AS(HopfieldSystem(g, {-1.0, -1.0, -1.0, -1.0}, {theta[0]}), Error);
  HopfieldOptions inh;
  inh.inhibitory = true;
  try {
    HopfieldSystem(g, {-1.0, 0.0, -1.0, -1.0}, theta, inh);
    FAIL("expected ModeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ModeMismatch);
  }
  const HopfieldSystem sys(g, {-1.0, -1.0, -1.0, -1.0}, theta);
  CHECK_THROWS_AS(step_categorical(sys, HopfieldState{{theta[0]}, 0}), Error);
  HopfieldOptions tiny;
  tiny.word_budget = 3;
  const HopfieldSystem small(g, {-0.1, -0.1, -0.1, -0.1}, theta, tiny);
  CHECK_THROWS_AS(run(small, HopfieldState{theta, 0}, 5), Error);
}

TEST_CASE("reduction on random inhibitory systems matches the explicit recursion") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    HopfieldState init;
    HopfieldOptions opts;
    opts.compact = true;
    const HopfieldSystem sys = random_inhibitory(s, 5, opts, init);
    CHECK(verify_reduction(sys, init, 50) <= 1e-9);
    const std::size_t m = sys.edge_count();
    std::vector<std::vector<double>> t(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t[i][j] = sys.coupling(i, j);
    const auto ref = oracle::hopfield_weights(t, sys.theta_weights(), total_weights(init), 50, true);
    const Trajectory traj = run(sys, init, 50);
    for (std::size_t n = 0; n <= 50; ++n)
      for (std::size_t e = 0; e < m; ++e) CHECK(std::abs(ref[n][e] - traj.alpha[n][e]) <= 1e-12 * (1 + ref[n][e]));
  }
}

TEST_CASE("uncompacted and compacted runs agree and track word counts") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    HopfieldState init;
    HopfieldOptions opts;
    const HopfieldSystem raw = random_inhibitory(100 + s, 3, opts, init);
    opts.compact = true;
    opts.inhibitory = true;
    const HopfieldSystem merged(raw.network().network(), raw.coupling_matrix(), raw.theta(), opts);
    const Trajectory a = run(raw, init, 6);
    const Trajectory b = run(merged, init, 6);
    const std::size_t m = raw.edge_count();
    for (std::size_t n = 0; n < a.states.size(); ++n) {
      for (std::size_t e = 0; e < m; ++e) CHECK(canonical_gap(a.states[n].x[e], b.states[n].x[e]) <= 1e-12);
      if (n == 0) continue;
      // |X_e(n+1)| - 1 = (|X_e(n)| - 1) + gate * (sum_e' (|X_e'(n)| - 1) + |Theta_e| - 1)
      const HopfieldState& prev = a.states[n - 1];
      std::size_t total = 0;
      for (const auto& x : prev.x) total += nonzero_instances(x);
      for (std::size_t e = 0; e < m; ++e) {
        const bool open = total_weight(gate_input(raw, prev, e)) >= 0.0;
        const std::size_t expect =
            nonzero_instances(prev.x[e]) + (open ? total + nonzero_instances(raw.theta()[e]) : 0);
        CHECK(nonzero_instances(a.states[n].x[e]) == expect);
      }
    }
  }
}

TEST_CASE("with-self dynamics never lowers a weight") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    HopfieldState init;
    HopfieldOptions opts;
    opts.compact = true;
    const Trajectory traj = run(random_inhibitory(200 + s, 5, opts, init), init, 30);
    for (std::size_t n = 1; n < traj.alpha.size(); ++n)
      for (std::size_t e = 0; e < traj.alpha[n].size(); ++e) CHECK(traj.alpha[n][e] >= traj.alpha[n - 1][e]);
  }
}

TEST_CASE("symmetric 2-cycle stays in the equalizer") {
  const DiGraph g = from_arcs(2, {{0, 1}, {1, 0}});
  HopfieldOptions opts;
  opts.equalizer = true;
  opts.compact = true;
  const std::vector<double> t = {-0.5, -0.25, -0.25, -0.5};
  // on a 2-cycle balance means equal columns sums at both vertices: t00 = t10, t01 = t11
  CHECK_THROWS_AS(HopfieldSystem(g, t, {single("110", 1.0), single("110", 1.0)}, opts), Error);
  const std::vector<double> tb = {-0.5, -0.25, -0.5, -0.25};
  const HopfieldSystem sys(g, tb, {single("110", 1.0), single("110", 1.0)}, opts);
  const Trajectory traj = run(sys, HopfieldState{{single("011", 0.5), single("011", 0.5)}, 0}, 20);
  CHECK(traj.in_equalizer.size() == 21);
  for (bool ok : traj.in_equalizer) CHECK(ok);
}

TEST_CASE("equalizer survives a step when every gate agrees and can fail when they disagree") {
  // triangle 0->1, 1->2, 0->2 carries the circulation (1, 1, -1)
  const DiGraph g = from_arcs(3, {{0, 1}, {1, 2}, {0, 2}});
  HopfieldOptions opts;
  opts.equalizer = true;
  const std::vector<double> circ = {1.0, 1.0, -1.0};
  auto theta_for = [&](double scale) {
    std::vector<WeightedCode> th;
    for (double c : circ) th.push_back(single("10", scale * c));
    return th;
  };
  // zero coupling: every gate sees its own input sign, so the third gate closes
  const HopfieldSystem mixed(g, std::vector<double>(9, 0.0), theta_for(1.0), opts);
  const HopfieldState s0{theta_for(1.0), 0};
  CHECK(is_in_equalizer(as_functor(mixed, s0), 1e-12).ok);
  CHECK_FALSE(is_in_equalizer(as_functor(mixed, step_categorical(mixed, s0)), 1e-12).ok);

  // coupling columns proportional to the circulation keep every gate open
  std::vector<double> t(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i * 3 + j] = circ[i] * 0.1 * (1.0 + j);
  const HopfieldSystem open(g, t, std::vector<WeightedCode>(3, single("10", 0.0)), opts);
  HopfieldState s{{single("01", 1.0), single("01", 1.0), single("01", -1.0)}, 0};
  for (int n = 0; n < 5; ++n) {
    s = step_categorical(open, s);
    CHECK(is_in_equalizer(as_functor(open, s), 1e-9).ok);
  }
}

TEST_CASE("leak relation residual detects the with-self dynamics") {
  const DiGraph g = from_arcs(1, {{0, 0}});
  const HopfieldSystem sys(g, {-0.5}, {single("10", 1.0)});
  const Trajectory traj = run(sys, HopfieldState{{single("01", 1.0)}, 0}, 3);
  CHECK(leak_relation_residual(sys, traj) > 0.0);
}
