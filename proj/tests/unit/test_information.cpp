#include <cmath>
#include <numeric>

#include "catnet/error.hpp"
#include "catnet/information.hpp"
#include "catnet/rng.hpp"
#include "catnet/transitions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catnet;

namespace {

std::vector<double> random_point(Rng& rng, std::size_t k, bool allow_zero = false) {
  std::vector<double> p(k);
  double s = 0.0;
  for (double& x : p) {
    x = -std::log(1.0 - rng.uniform());
    if (allow_zero && rng.bernoulli(0.2)) x = 0.0;
    s += x;
  }
  if (s == 0.0) p[0] = s = 1.0;
  for (double& x : p) x /= s;
  return p;
}

JointDistribution random_joint(Rng& rng, std::size_t a, std::size_t b, bool allow_zero = false) {
  return JointDistribution({{"A", a}, {"B", b}}, random_point(rng, a * b, allow_zero));
}

}  // namespace

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(JointDistribution({{"A", 2}}, {0.5, 0.6}), Error);
  CHECK_THROWS_AS(JointDistribution({{"A", 2}}, {1.5, -0.5}), Error);
  CHECK_THROWS_AS(JointDistribution({{"A", 2}}, {1.0}), Error);
  const JointDistribution u = JointDistribution::uniform({{"A", 2}, {"B", 3}});
  CHECK(u.outcome_count() == 6);
  CHECK(u.flatten(u.unflatten(4)) == 4);
  CHECK(u.unflatten(4) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("entropy") {
  for (double a : {0.5, 1.0, 2.0, 3.0}) CHECK(entropy({1.0, 0.0, 0.0}, a) == doctest::Approx(0.0));
  CHECK(entropy({0.5, 0.5}) == doctest::Approx(std::log(2.0)));
  CHECK(entropy({0.5, 0.5}, 2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(entropy({1.0}, 0.0), Error);
  CHECK_THROWS_AS(entropy({1.0}, -1.0), Error);
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_point(rng, 2 + rng.below(6), true);
    const double s = entropy(p, 1.0);
    // one-sided offsets move by about h * sum p log^2 p / 2, the symmetric pair cancels that term
    double slope = 0.0;
    for (double x : p)
      if (x > 0.0) slope += 0.5 * x * std::log(x) * std::log(x);
    const double up = entropy(p, 1.0 + 1e-4), down = entropy(p, 1.0 - 1e-4);
    CHECK(std::abs(up - s + 1e-4 * slope) < 1e-6);
    CHECK(std::abs(down - s - 1e-4 * slope) < 1e-6);
    CHECK(std::abs(0.5 * (up + down) - s) < 1e-6);
    for (double a : {0.5, 1.0, 2.0, 3.0}) CHECK(entropy(p, a) == doctest::Approx(oracle::tsallis(p, a)).epsilon(1e-12));
  }
}

TEST_CASE("kl divergence") {
  CHECK(kl({0.3, 0.7}, {0.3, 0.7}) == 0.0);
  CHECK(kl({1.0, 0.0}, {0.5, 0.5}) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(kl({0.5, 0.5}, {1.0, 0.0}), Error);
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_point(rng, 4, true);
    const auto q = random_point(rng, 4);
    const double base = kl(p, q, 1.0);
    CHECK(std::abs(0.5 * (kl(p, q, 1.0 - 1e-4) + kl(p, q, 1.0 + 1e-4)) - base) < 1e-6);
    for (double a : {0.25, 0.5, 1.0}) {
      CHECK(kl(p, q, a) >= -1e-15);
      CHECK(kl(p, p, a) == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("kl is jointly convex at alpha 1") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto p1 = random_point(rng, 5), q1 = random_point(rng, 5);
    const auto p2 = random_point(rng, 5), q2 = random_point(rng, 5);
    const double t = rng.uniform();
    std::vector<double> p(5), q(5);
    for (int i = 0; i < 5; ++i) {
      p[i] = t * p1[i] + (1 - t) * p2[i];
      q[i] = t * q1[i] + (1 - t) * q2[i];
    }
    CHECK(kl(p, q) <= t * kl(p1, q1) + (1 - t) * kl(p2, q2) + 1e-12);
  }
}

TEST_CASE("variables") {
  const JointDistribution d = JointDistribution::uniform({{"A", 2}, {"B", 3}});
  const VariableSpec a = VariableSpec::from_axes(d, {0});
  const VariableSpec b = VariableSpec::from_axes(d, {1});
  CHECK(a.value_count() == 2);
  CHECK(join(a, b).value_count() == 6);
  CHECK(is_coarser(a, join(a, b)));
  CHECK_FALSE(is_coarser(join(a, b), a));
  CHECK(is_coarser(VariableSpec::constant(6), a));
  CHECK(pushforward(b, d.probs()) == std::vector<double>{0.5 / 1.5 * 0.5 * 2, 1.0 / 3.0, 1.0 / 3.0});
}

TEST_CASE("semigroup action") {
  Rng rng(4);
  const JointDistribution d = random_joint(rng, 3, 2);
  const Cochain0 one = [](const std::vector<double>&) { return 1.0; };
  const VariableSpec a = VariableSpec::from_axes(d, {0});
  CHECK(sigma_action(a, one, d.probs(), 1.0) == doctest::Approx(1.0));
  const Cochain0 f = [](const std::vector<double>& p) { return p[0] * 3.0 + p[1]; };
  CHECK(sigma_action(VariableSpec::constant(6), f, d.probs(), 2.0) == doctest::Approx(f(d.probs())));

  const VariableSpec b = VariableSpec::from_axes(d, {1});
  const Cochain0 sb = [&](const std::vector<double>& p) { return entropy(pushforward(b, p)); };
  // S(B | A) from the joint and marginal
  const double direct = entropy(d.probs()) - entropy(pushforward(a, d.probs()));
  CHECK(sigma_action(a, sb, d.probs(), 1.0) == doctest::Approx(direct));
  CHECK(conditional_entropy(b, a, d.probs()) == doctest::Approx(direct));
}

TEST_CASE("coboundaries") {
  Rng rng(5);
  const Cochain0 one = [](const std::vector<double>&) { return 1.0; };
  for (int k = 0; k < 500; ++k) {
    const JointDistribution d = random_joint(rng, 1 + rng.below(3), 1 + rng.below(2), true);
    const VariableSpec a = VariableSpec::from_axes(d, {0});
    const VariableSpec b = VariableSpec::from_axes(d, {1});
    CHECK(std::abs(coboundary0(one, a, d.probs(), 1.0)) <= 1e-12);
    CHECK(std::abs(coboundary1(tsallis_cochain(1.0), a, b, d.probs(), 1.0)) <= 1e-10);
    // chain rule S(A B) = S(A) + A.S(B)
    const double lhs = entropy(pushforward(join(a, b), d.probs()));
    const Cochain0 sb = [&](const std::vector<double>& p) { return entropy(pushforward(b, p)); };
    CHECK(std::abs(lhs - entropy(pushforward(a, d.probs())) - sigma_action(a, sb, d.probs(), 1.0)) <= 1e-10);
    for (double al : {0.5, 2.0, 3.0}) {
      CHECK(std::abs(coboundary1(tsallis_cochain(al), a, b, d.probs(), al)) <= 1e-10);
      const Cochain0 sba = [&](const std::vector<double>& p) { return entropy(pushforward(b, p), al); };
      CHECK(std::abs(entropy(pushforward(join(a, b), d.probs()), al) - entropy(pushforward(a, d.probs()), al) -
                     sigma_action(a, sba, d.probs(), al)) <= 1e-10);
    }
  }
  // constants are not cocycles away from alpha = 1
  const JointDistribution u = JointDistribution::uniform({{"A", 2}});
  CHECK(std::abs(coboundary0(one, VariableSpec::identity(2), u.probs(), 2.0)) > 0.1);
}

TEST_CASE("coboundary squares to zero") {
  Rng rng(6);
  for (int k = 0; k < 100; ++k) {
    const double al = std::vector<double>{0.5, 1.0, 2.0}[rng.below(3)];
    const double w1 = rng.uniform(-1, 1), w2 = rng.uniform(-1, 1);
    const Cochain0 f = [=](const std::vector<double>& p) {
      double s = w1;
      for (std::size_t i = 0; i < p.size(); ++i) s += w2 * std::sin(1.0 + i + 3.0 * p[i]);
      return s;
    };
    const JointDistribution d({{"A", 2}, {"B", 2}, {"C", 2}}, random_point(rng, 8));
    const VariableSpec x1 = VariableSpec::from_axes(d, {0});
    const VariableSpec x2 = VariableSpec::from_axes(d, {1});
    CHECK(std::abs(coboundary1(coboundary_of(f, al), x1, x2, d.probs(), al)) <= 1e-10);
  }
}

TEST_CASE("entropy along a surjection") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const JointDistribution d = random_joint(rng, 3, 3, true);
    const VariableSpec pi = VariableSpec::from_axes(d, {0});
    const double full = entropy(d.probs());
    const double coarse = entropy(pushforward(pi, d.probs()));
    CHECK(full >= coarse - 1e-15);
    CHECK(std::abs(full - coarse - surjection_deficit(pi, d.probs())) <= 1e-10);
  }
}

TEST_CASE("code outcomes") {
  const CodeOutcomes z = code_to_outcomes(Code::zero(3));
  CHECK(z.outcomes == 1);
  for (const auto& v : z.variables) CHECK(v.value_count() == 1);

  const Code c1 = Code::from_strings(2, {"000", "110", "111"});
  const Code c2 = Code::from_strings(2, {"000", "011"});
  CHECK(code_to_outcomes(wedge_sum(c1, c2)).outcomes == c1.size() + c2.size() - 1);
  const CodeOutcomes o = code_to_outcomes(c1);
  CHECK(o.variables.front().value_count() == 3);  // b = 0, 2, 3
}

TEST_CASE("probability complexes") {
  const auto hollow = qx_complex(Code::from_strings(2, {"000", "110", "011", "101"}));
  CHECK(betti(hollow) == std::vector<std::size_t>{1, 1});
  DiGraph tri = DiGraph::with_vertices(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(qx_complex(tri, 3).count(2) == 1);

  // codes read off a network's architecture sit inside the flag complex of their support graph
  DiGraph net = DiGraph::with_vertices(3);
  net.add_edge(0, 1);
  net.add_edge(1, 2);
  PartMap parts;
  for (VertexId v : net.vertices()) parts.emplace(v, integrate_and_fire(1));
  for (std::size_t n = 2; n <= 4; ++n) {
    const Code c = extract_code(xi(net, parts), n);
    const auto nerve = code_nerve(c);
    CHECK(nerve.is_subcomplex_of(flag_complex_undirected(support_graph(c), static_cast<int>(n))));
  }
}
