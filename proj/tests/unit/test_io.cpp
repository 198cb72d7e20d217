#include <cmath>

#include "catnet/error.hpp"
#include "catnet/io.hpp"
#include "doctest.h"

using namespace catnet;

TEST_CASE("graph round trip") {
  DiGraph g = DiGraph::with_vertices(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const std::string text = io::graph_to_json(g);
  CHECK(io::graph_to_json(io::graph_from_json(text)) == text);
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
  CHECK_THROWS_AS(io::graph_from_json("{\"vertices\": [0], \"edges\": [[0, 0, 4]]}"), Error);
  CHECK_THROWS_AS(io::graph_from_json("not json"), Error);
}

TEST_CASE("code text") {
  const WeightedCode wc = io::code_from_text("# header\n3 2\n000\n110\t0.5\n\n011 2\n");
  CHECK(wc.size() == 3);
  CHECK(wc.weight == std::vector<double>{0.0, 0.5, 2.0});
  CHECK(io::code_from_text(io::code_to_text(wc)) == wc);
  CHECK_THROWS_AS(io::code_from_text("3 2\n0a0\n"), Error);
  CHECK_THROWS_AS(io::code_from_text("3 2\n01\n"), Error);
}

TEST_CASE("transition system round trip") {
  const TransitionSystem t = integrate_and_fire(2, true);
  CHECK(io::system_from_json(io::system_to_json(t)) == t);
  const TransitionSystem z = TransitionSystem::zero();
  CHECK(io::system_from_json(io::system_to_json(z)) == z);
}

TEST_CASE("distribution round trip") {
  const JointDistribution d({{"A", 2}, {"B", 3}}, {0.1, 0.2, 0.3, 0.1, 0.2, 0.1});
  const JointDistribution back = io::distribution_from_json(io::distribution_to_json(d));
  CHECK(back.probs() == d.probs());
  CHECK_THROWS_AS(io::distribution_from_json("{\"axes\": [{\"name\": \"A\", \"size\": 2}], \"probs\": [0.9]}"), Error);
}

TEST_CASE("hopfield config") {
  const std::string cfg = R"({
    "graph": {"vertices": [0, 1], "edges": [[0, 0, 1], [1, 1, 0]]},
    "coupling": [-0.5, -0.25, -0.25, -0.5],
    "theta": [{"length": 2, "alphabet": 2, "words": ["00", "11"], "weights": [0, 1]},
              {"length": 2, "alphabet": 2, "words": ["00", "10"], "weights": [0, 2]}],
    "initial": [{"length": 2, "alphabet": 2, "words": ["00"], "weights": [0]},
                {"length": 2, "alphabet": 2, "words": ["00"], "weights": [0]}],
    "variant": "pure", "inhibitory": true})";
  const io::HopfieldSetup s = io::hopfield_from_json(cfg);
  CHECK(s.system.edge_count() == 2);
  CHECK(s.system.options().variant == HopfieldVariant::Pure);
  CHECK(s.system.options().inhibitory);
  CHECK(s.system.theta_weights() == std::vector<double>{1.0, 2.0});
  CHECK(s.initial.x.size() == 2);
  CHECK(io::state_to_json(s.system, s.initial).find("\"0\"") != std::string::npos);
  CHECK_THROWS_AS(io::hopfield_from_json(R"({"graph": {"vertices": [0], "edges": []}, "variant": "odd"})"), Error);
}

TEST_CASE("number formatting") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -2.5}) CHECK(std::stod(io::format_double(x)) == x);
  CHECK(io::format_double(0.5) == "0.5");
}
