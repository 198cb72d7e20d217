#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "catnet/graph.hpp"
#include "catnet/hopfield.hpp"
#include "catnet/information.hpp"

namespace catnet {

/// Partition of unit indices 0..N-1, blocks sorted by smallest member.
class SystemPartition {
 public:
  explicit SystemPartition(std::vector<std::vector<std::size_t>> blocks);
  /// Block index per unit (restricted growth string).
  static SystemPartition from_labels(const std::vector<std::size_t>& labels);
  static SystemPartition finest(std::size_t units);
  static SystemPartition single(std::size_t units);

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t unit_count() const noexcept { return units_; }
  /// Restricted growth string; partitions compare by it.
  std::vector<std::size_t> labels() const;

  friend bool operator==(const SystemPartition& a, const SystemPartition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t units_ = 0;
};

enum class PartitionSet { All, Bipartitions };

/// Partitions with at least two blocks, in lexicographic order of their
/// restricted growth strings.
std::vector<SystemPartition> enumerate_partitions(std::size_t units, PartitionSet which);

/// Joint of (X_1..X_N, Y_1..Y_N) over a sparse support. Each entry holds the
/// per-unit input and output values.
struct SparseJoint {
  std::size_t units = 0;
  struct Entry {
    std::vector<std::uint32_t> x;
    std::vector<std::uint32_t> y;
    double p = 0.0;
  };
  std::vector<Entry> entries;
};

/// Dense joint whose axes are X_1..X_N then Y_1..Y_N. Throws AxisMismatch
/// for an odd axis count.
SparseJoint to_sparse(const JointDistribution& p);

/// KL(P || Q*) with Q*(x, y) = P(x) prod_B P(y_B | x_B), on the support of P.
double ii_lambda_sparse(const SparseJoint& p, const SystemPartition& lam);

/// max |Q(y_B | x) - Q(y_B | x_B)| over blocks and x with Q(x) > 0.
double manifold_residual(const JointDistribution& q, const SystemPartition& lam);

struct ProjectionOptions {
  double tol = 1e-8;
  std::size_t max_iter = 100;
  double smoothing = 1e-12;  // added to zero cells before projecting
};

struct ProjectionResult {
  JointDistribution q_star;
  double kl_value = 0.0;
  double constraint_residual = 0.0;
  double gradient_norm = 0.0;  // projected gradient on the factor simplices
  std::size_t iterations = 0;
  double smoothing = 0.0;
};

/// Minimizes KL(P || Q) over Q(x, y) = P_X(x) prod_B q_B(y_B | x_B) by block
/// coordinate descent; each block update is the exact conditional.
ProjectionResult project(const JointDistribution& p, const SystemPartition& lam, const ProjectionOptions& opts = {});

double ii_lambda(const JointDistribution& p, const SystemPartition& lam, const ProjectionOptions& opts = {});

struct IIResult {
  double value = 0.0;
  SystemPartition mip = SystemPartition::single(1);
};

/// Minimum of ii_lambda over the enumerated partitions; ties keep the first.
/// All-partition enumeration is capped at max_units (TooManyUnits).
IIResult ii(const JointDistribution& p, PartitionSet which, const ProjectionOptions& opts = {},
            std::size_t max_units = 6);
IIResult ii_sparse(const SparseJoint& p, PartitionSet which, std::size_t max_units = 16);

struct PythagoreanReport {
  std::vector<double> deviation;  // KL(P||R) - KL(P||Q*) - KL(Q*||R)
  std::vector<double> gap;        // KL(P||R) - KL(P||Q*)
  double kl_star = 0.0;
};

/// Samples R from the same factor family with seeded random conditionals.
PythagoreanReport pythagorean_check(const JointDistribution& p, const SystemPartition& lam, std::size_t r_samples,
                                    std::uint64_t seed);

enum class NodeRule {
  Threshold,  // [sum w x + b > 0] with seeded weights
  Parity,     // xor of predecessors
};

struct FeedforwardDynamics {
  NodeRule rule = NodeRule::Threshold;
};

/// Joint of (X_t, X_t+1) for a layered network with uniform X_t. Inputs keep
/// their state; other nodes apply the rule, then flip with probability eps.
SparseJoint feedforward_joint(const DiGraph& g, const FeedforwardDynamics& dyn, double eps, std::uint64_t seed);

/// ii_lambda for the partition into input-value slices: one unit per input
/// assignment a, reading (X, X_t+1) when the inputs equal a and a blank
/// value otherwise.
double feedforward_ii(const DiGraph& g, const FeedforwardDynamics& dyn, double eps, std::uint64_t seed);

/// Two units, both updated to x_a xor x_b with flip noise; ii over the
/// node partition.
double recurrent_xor_ii(double eps);

struct HopfieldIIStep {
  std::size_t step = 0;
  double ii = 0.0;
  SystemPartition mip = SystemPartition::single(1);
};

/// Per step n: b_e = [alpha_e(n) > theta_b]; X is b with flip noise eps; Y is
/// the binarized classical step from alpha masked by X. Exact enumeration,
/// at most 10 edges. The seed is accepted for interface stability; the
/// exact mode draws no random numbers.
std::vector<HopfieldIIStep> hopfield_ii_trace(const HopfieldSystem& sys, const HopfieldState& initial,
                                              std::size_t steps, double theta_b, double eps, std::uint64_t seed);

}  // namespace catnet
