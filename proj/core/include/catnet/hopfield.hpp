#pragma once

#include <cstddef>
#include <vector>

#include "catnet/codes.hpp"
#include "catnet/graph.hpp"
#include "catnet/netfunctors.hpp"

namespace catnet {

enum class HopfieldVariant {
  WithSelf,  // X(n+1) = X(n) ⊕ (Y)_+
  Pure,      // X(n+1) = (Y)_+
};

struct HopfieldOptions {
  HopfieldVariant variant = HopfieldVariant::WithSelf;
  bool inhibitory = false;  // every coupling strictly negative
  bool equalizer = false;   // coupling columns balanced at every vertex
  std::size_t word_budget = 2'000'000;  // total word instances across edges
  bool compact = false;  // merge repeated words after every step
  double tol = 1e-9;
};

/// Categorical Hopfield system on the edges of a pointed network. Couplings
/// act on weighted codes by scaling weights: T_ee'(C, w) = (C, t_ee' w).
class HopfieldSystem {
 public:
  /// coupling is row-major |E| x |E| over the network edges in ascending id
  /// order; theta has one weighted code per edge. Throws DimensionMismatch,
  /// ModeMismatch (inhibitory / equalizer validation).
  HopfieldSystem(const DiGraph& network, std::vector<double> coupling, std::vector<WeightedCode> theta,
                 HopfieldOptions options = {});

  const PointedDiGraph& network() const noexcept { return network_; }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  double coupling(std::size_t i, std::size_t j) const { return coupling_[i * edges_.size() + j]; }
  const std::vector<double>& coupling_matrix() const noexcept { return coupling_; }
  const std::vector<WeightedCode>& theta() const noexcept { return theta_; }
  /// theta_e = alpha(Theta_e)
  std::vector<double> theta_weights() const;
  const HopfieldOptions& options() const noexcept { return options_; }

 private:
  PointedDiGraph network_;
  std::vector<EdgeId> edges_;
  std::vector<double> coupling_;
  std::vector<WeightedCode> theta_;
  HopfieldOptions options_;
};

struct HopfieldState {
  std::vector<WeightedCode> x;  // per network edge, ascending id
  std::size_t step = 0;
};

/// True iff sum over out-edges of t_{e e'} equals sum over in-edges at every
/// non-base vertex and every column e'.
bool coupling_balanced(const PointedDiGraph& g, const std::vector<EdgeId>& edges, const std::vector<double>& coupling,
                       double tol);

/// Y_e = ⊕_e' T_ee'(X_e') ⊕ Theta_e, before gating.
WeightedCode gate_input(const HopfieldSystem& sys, const HopfieldState& state, std::size_t e);

HopfieldState step_categorical(const HopfieldSystem& sys, const HopfieldState& state);

/// alpha(n+1) = alpha(n) + (t alpha(n) + theta)_+ for the with-self variant,
/// (t alpha(n) + theta)_+ for the pure variant.
std::vector<double> step_classical(const HopfieldSystem& sys, const std::vector<double>& alpha);

std::vector<double> total_weights(const HopfieldState& state);

/// Summing functor of a state on the pointed network.
SummingFunctor<WeightedCode> as_functor(const HopfieldSystem& sys, const HopfieldState& state);

struct Trajectory {
  std::vector<HopfieldState> states;
  std::vector<std::vector<double>> alpha;      // alpha of each categorical state
  std::vector<std::vector<double>> classical;  // classical recursion from alpha(X(0))
  std::vector<bool> in_equalizer;              // filled only in equalizer mode
};

/// Runs both dynamics. In equalizer mode every state is checked.
Trajectory run(const HopfieldSystem& sys, const HopfieldState& initial, std::size_t n_steps);

/// Max over steps and edges of |alpha(X_e(n)) - classical(e, n)|. Throws
/// ModeMismatch if the system is flagged inhibitory with a coupling >= 0.
double verify_reduction(const HopfieldSystem& sys, const HopfieldState& initial, std::size_t n_steps);

/// Residual of X(n+1) ⊕ X(n) = (Y(n))_+ along a trajectory, as the largest
/// canonical-form gap. The relation is checked, never solved.
double leak_relation_residual(const HopfieldSystem& sys, const Trajectory& traj);

}  // namespace catnet
