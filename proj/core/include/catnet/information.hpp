#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "catnet/codes.hpp"
#include "catnet/graph.hpp"
#include "catnet/simplicial.hpp"

namespace catnet {

struct Axis {
  std::string name;
  std::size_t size = 0;

  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Probability vector over the product of the axes, row-major (last axis
/// fastest). Entries >= 0 summing to 1 within 1e-12.
class JointDistribution {
 public:
  JointDistribution(std::vector<Axis> axes, std::vector<double> probs);

  /// Uniform distribution over the given axes.
  static JointDistribution uniform(std::vector<Axis> axes);

  const std::vector<Axis>& axes() const noexcept { return axes_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t outcome_count() const noexcept { return probs_.size(); }

  /// Coordinates of a flat outcome index, and back.
  std::vector<std::size_t> unflatten(std::size_t index) const;
  std::size_t flatten(const std::vector<std::size_t>& coords) const;

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  std::vector<Axis> axes_;
  std::vector<double> probs_;
};

/// Random variable on an outcome space given by the surjection outcome ->
/// value, with values relabelled 0..k-1 in order of first appearance.
class VariableSpec {
 public:
  explicit VariableSpec(std::vector<std::size_t> map);

  /// The variable reading the listed axes of `d`.
  static VariableSpec from_axes(const JointDistribution& d, const std::vector<std::size_t>& axes);
  /// One-valued variable (the unit of the structure).
  static VariableSpec constant(std::size_t outcomes);
  static VariableSpec identity(std::size_t outcomes);

  std::size_t outcome_count() const noexcept { return map_.size(); }
  std::size_t value_count() const noexcept { return values_; }
  std::size_t operator()(std::size_t outcome) const { return map_.at(outcome); }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;

 private:
  std::vector<std::size_t> map_;
  std::size_t values_ = 0;
};

/// Common refinement X ∧ Y.
VariableSpec join(const VariableSpec& a, const VariableSpec& b);

/// True iff `coarse` is a function of `fine`.
bool is_coarser(const VariableSpec& coarse, const VariableSpec& fine);

/// Y_* P
std::vector<double> pushforward(const VariableSpec& y, const std::vector<double>& p);

/// P restricted to the fiber Y = value, renormalized. Requires positive mass.
std::vector<double> conditional(const VariableSpec& y, std::size_t value, const std::vector<double>& p);

/// Tsallis entropy (1 - sum p^a)/(a - 1); Shannon (natural log) at a = 1.
/// Throws InvalidAlpha for a <= 0.
double entropy(const std::vector<double>& p, double alpha = 1.0);

/// KL_a(p || q). Throws SupportViolation when p puts mass where q does not.
double kl(const std::vector<double>& p, const std::vector<double>& q, double alpha = 1.0);

using Cochain0 = std::function<double(const std::vector<double>&)>;
using Cochain1 = std::function<double(const VariableSpec&, const std::vector<double>&)>;
using Cochain2 = std::function<double(const VariableSpec&, const VariableSpec&, const std::vector<double>&)>;

/// Action of a variable: Y.f(P) = sum_y (Y_*P(y))^a f(P | Y = y), over y
/// with positive mass.
double sigma_action(const VariableSpec& y, const Cochain0& f, const std::vector<double>& p, double alpha);

/// δf[X] = X.f - f
double coboundary0(const Cochain0& f, const VariableSpec& x1, const std::vector<double>& p, double alpha);
/// δf[X1|X2] = X1.f[X2] - f[X1 X2] + f[X1]
double coboundary1(const Cochain1& f, const VariableSpec& x1, const VariableSpec& x2, const std::vector<double>& p,
                   double alpha);
/// δg[X1|X2|X3] = X1.g[X2|X3] - g[X1 X2|X3] + g[X1|X2 X3] - g[X1|X2]
double coboundary2(const Cochain2& g, const VariableSpec& x1, const VariableSpec& x2, const VariableSpec& x3,
                   const std::vector<double>& p, double alpha);

/// S_a[X](P) = entropy of X_*P.
Cochain1 tsallis_cochain(double alpha);

/// The 1-cochain δf for a 0-cochain f.
Cochain1 coboundary_of(const Cochain0& f, double alpha);

/// S(Z | Y) = sum_y P(y) S(P_Z | Y = y), Shannon.
double conditional_entropy(const VariableSpec& z, const VariableSpec& y, const std::vector<double>& p);

/// Fiberwise formula sum_y Q(y) S(P | pi = y) for the entropy lost along a
/// surjection; equals S(P) - S(pi_* P).
double surjection_deficit(const VariableSpec& pi, const std::vector<double>& p);

/// Outcome space of a code: one outcome per word instance.
struct CodeOutcomes {
  std::size_t outcomes = 0;
  std::size_t zero = 0;
  /// Level-set partitions of b(c), then of each digit position.
  std::vector<VariableSpec> variables;
};

CodeOutcomes code_to_outcomes(const Code& c);

/// Nerve of the code.
SimplicialComplex qx_complex(const Code& c);

/// Directed flag complex of g, cross-checked against the nerve of the code
/// whose words are the clique supports; throws on disagreement.
SimplicialComplex qx_complex(const DiGraph& g, int max_dim, CliqueVariant variant = CliqueVariant::EdgePair);

/// Graph on digit positions with i -> j (i < j) when some word is 1 at both.
DiGraph support_graph(const Code& c);

}  // namespace catnet
