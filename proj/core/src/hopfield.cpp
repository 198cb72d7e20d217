#include "catnet/hopfield.hpp"

#include <cmath>
#include <string>

#include "catnet/error.hpp"
#include "catnet/resources.hpp"

namespace catnet {

namespace {

WeightedCode scaled(const WeightedCode& x, double t) {
  WeightedCode out = x;
  for (double& w : out.weight) w *= t;
  return out;
}

std::size_t word_total(const std::vector<WeightedCode>& xs) {
  std::size_t n = 0;
  for (const auto& x : xs) n += x.size();
  return n;
}

}  // namespace

bool coupling_balanced(const PointedDiGraph& g, const std::vector<EdgeId>& edges, const std::vector<double>& coupling,
                       double tol) {
  const std::size_t m = edges.size();
  for (VertexId v : g.network_vertices()) {
    for (std::size_t j = 0; j < m; ++j) {
      double out = 0.0, in = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.graph.edge(edges[i]);
        if (e.source == v) out += coupling[i * m + j];
        if (e.target == v) in += coupling[i * m + j];
      }
      if (std::abs(out - in) > tol) return false;
    }
  }
  return true;
}

HopfieldSystem::HopfieldSystem(const DiGraph& network, std::vector<double> coupling, std::vector<WeightedCode> theta,
                               HopfieldOptions options)
    : network_(to_pointed(network)), coupling_(std::move(coupling)), theta_(std::move(theta)), options_(options) {
  edges_ = network_.network_edges();
  const std::size_t m = edges_.size();
  if (coupling_.size() != m * m) throw Error(Errc::DimensionMismatch, "coupling must be |E| x |E|");
  if (theta_.size() != m) throw Error(Errc::DimensionMismatch, "one external input per edge");
  if (options_.inhibitory) {
    for (double t : coupling_)
      if (!(t < 0.0)) throw Error(Errc::ModeMismatch, "inhibitory mode needs every coupling < 0");
  }
  if (options_.equalizer && !coupling_balanced(network_, edges_, coupling_, options_.tol)) {
    throw Error(Errc::ModeMismatch, "coupling is not balanced at every vertex");
  }
}

std::vector<double> HopfieldSystem::theta_weights() const {
  std::vector<double> out;
  for (const auto& th : theta_) out.push_back(total_weight(th));
  return out;
}

WeightedCode gate_input(const HopfieldSystem& sys, const HopfieldState& state, std::size_t e) {
  const std::size_t m = sys.edge_count();
  WeightedCode y = scaled(state.x[0], sys.coupling(e, 0));
  for (std::size_t j = 1; j < m; ++j) y = wedge_sum(y, scaled(state.x[j], sys.coupling(e, j)));
  return wedge_sum(y, sys.theta()[e]);
}

HopfieldState step_categorical(const HopfieldSystem& sys, const HopfieldState& state) {
  const std::size_t m = sys.edge_count();
  if (state.x.size() != m) throw Error(Errc::DimensionMismatch, "state has the wrong number of edges");
  HopfieldState next;
  next.step = state.step + 1;
  next.x.reserve(m);
  std::size_t words = 0;
  for (std::size_t e = 0; e < m; ++e) {
    const WeightedCode y = gate_input(sys, state, e);
    const bool open = threshold(RealResource{total_weight(y)});
    const WeightedCode& base = state.x[e];
    WeightedCode zero = WeightedCode::zero(base.code.length(), base.code.alphabet());
    if (sys.options().variant == HopfieldVariant::WithSelf) {
      next.x.push_back(open ? wedge_sum(base, y) : base);
    } else {
      next.x.push_back(open ? y : zero);
    }
    if (sys.options().compact) next.x.back() = compact(next.x.back());
    words += next.x.back().size();
    if (words > sys.options().word_budget) {
      throw Error(Errc::WordBudgetExceeded, "state exceeds " + std::to_string(sys.options().word_budget) +
                                                " word instances at step " + std::to_string(next.step));
    }
  }
  return next;
}

std::vector<double> step_classical(const HopfieldSystem& sys, const std::vector<double>& alpha) {
  const std::size_t m = sys.edge_count();
  if (alpha.size() != m) throw Error(Errc::DimensionMismatch, "alpha has the wrong number of edges");
  const auto theta = sys.theta_weights();
  std::vector<double> next(m);
  for (std::size_t e = 0; e < m; ++e) {
    double drive = 0.0;
    for (std::size_t j = 0; j < m; ++j) drive += sys.coupling(e, j) * alpha[j];
    drive += theta[e];
    const double gated = drive >= 0.0 ? drive : 0.0;
    next[e] = sys.options().variant == HopfieldVariant::WithSelf ? alpha[e] + gated : gated;
  }
  return next;
}

std::vector<double> total_weights(const HopfieldState& state) {
  std::vector<double> out;
  for (const auto& x : state.x) out.push_back(total_weight(x));
  return out;
}

SummingFunctor<WeightedCode> as_functor(const HopfieldSystem& sys, const HopfieldState& state) {
  std::map<EdgeId, WeightedCode> gens;
  for (std::size_t i = 0; i < sys.edge_count(); ++i) gens.emplace(sys.edges()[i], state.x[i]);
  const int n = state.x.empty() ? 1 : state.x.front().code.length();
  const int q = state.x.empty() ? 2 : state.x.front().code.alphabet();
  return SummingFunctor<WeightedCode>(sys.network(), std::move(gens), WeightedCode::zero(n, q));
}

Trajectory run(const HopfieldSystem& sys, const HopfieldState& initial, std::size_t n_steps) {
  if (initial.x.size() != sys.edge_count()) throw Error(Errc::DimensionMismatch, "state has the wrong number of edges");
  if (word_total(initial.x) > sys.options().word_budget) throw Error(Errc::WordBudgetExceeded, "initial state too large");
  Trajectory traj;
  traj.states.push_back(initial);
  traj.alpha.push_back(total_weights(initial));
  traj.classical.push_back(traj.alpha.back());
  const bool check = sys.options().equalizer;
  if (check) traj.in_equalizer.push_back(is_in_equalizer(as_functor(sys, initial), sys.options().tol).ok);
  for (std::size_t n = 0; n < n_steps; ++n) {
    traj.states.push_back(step_categorical(sys, traj.states.back()));
    traj.alpha.push_back(total_weights(traj.states.back()));
    traj.classical.push_back(step_classical(sys, traj.classical.back()));
    if (check) traj.in_equalizer.push_back(is_in_equalizer(as_functor(sys, traj.states.back()), sys.options().tol).ok);
  }
  return traj;
}

double verify_reduction(const HopfieldSystem& sys, const HopfieldState& initial, std::size_t n_steps) {
  if (sys.options().inhibitory) {
    for (double t : sys.coupling_matrix())
      if (!(t < 0.0)) throw Error(Errc::ModeMismatch, "inhibitory mode needs every coupling < 0");
  }
  const Trajectory traj = run(sys, initial, n_steps);
  double dev = 0.0;
  for (std::size_t n = 0; n < traj.alpha.size(); ++n)
    for (std::size_t e = 0; e < sys.edge_count(); ++e)
      dev = std::max(dev, std::abs(traj.alpha[n][e] - traj.classical[n][e]));
  return dev;
}

double leak_relation_residual(const HopfieldSystem& sys, const Trajectory& traj) {
  double gap = 0.0;
  for (std::size_t n = 0; n + 1 < traj.states.size(); ++n) {
    const HopfieldState& cur = traj.states[n];
    for (std::size_t e = 0; e < sys.edge_count(); ++e) {
      const WeightedCode lhs = wedge_sum(traj.states[n + 1].x[e], cur.x[e]);
      const WeightedCode y = gate_input(sys, cur, e);
      const WeightedCode rhs = threshold(RealResource{total_weight(y)})
                                   ? y
                                   : WeightedCode::zero(y.code.length(), y.code.alphabet());
      gap = std::max(gap, canonical_gap(lhs, rhs));
    }
  }
  return gap;
}

}  // namespace catnet
