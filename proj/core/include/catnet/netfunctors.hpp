#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "catnet/codes.hpp"
#include "catnet/error.hpp"
#include "catnet/graph.hpp"
#include "catnet/transitions.hpp"

namespace catnet {

/// Dimension-valued carrier (finite dimensional vector spaces up to iso).
struct Dimension {
  std::size_t value = 0;
  friend bool operator==(const Dimension&, const Dimension&) = default;
};

// Carrier operations: categorical sum and canonical-form comparison.
inline WeightedCode carrier_sum(const WeightedCode& a, const WeightedCode& b) { return wedge_sum(a, b); }
inline TransitionSystem carrier_sum(const TransitionSystem& a, const TransitionSystem& b) { return coproduct(a, b); }
inline Dimension carrier_sum(const Dimension& a, const Dimension& b) { return {a.value + b.value}; }

inline bool carrier_equal(const WeightedCode& a, const WeightedCode& b, double tol) { return equivalent(a, b, tol); }
inline bool carrier_equal(const TransitionSystem& a, const TransitionSystem& b, double) {
  return canonicalize(a) == canonicalize(b);
}
inline bool carrier_equal(const Dimension& a, const Dimension& b, double) { return a == b; }

/// Largest entrywise gap between canonical forms of two weighted codes.
double canonical_gap(const WeightedCode& a, const WeightedCode& b);

/// Summing functor on the pointed edge set, stored by its values on single
/// edges. Subsets are evaluated by summing in ascending edge order.
template <class Object>
class SummingFunctor {
 public:
  SummingFunctor(PointedDiGraph network, std::map<EdgeId, Object> generators, Object zero)
      : network_(std::move(network)), generators_(std::move(generators)), zero_(std::move(zero)) {
    for (const auto& [e, obj] : generators_) {
      if (!network_.graph.has_edge(e) || e == network_.star_edge) {
        throw Error(Errc::UnknownEdge, "generator on edge " + std::to_string(e) + " outside the network");
      }
    }
    for (EdgeId e : network_.network_edges()) {
      if (!generators_.count(e)) throw Error(Errc::InvalidArgument, "missing generator for edge " + std::to_string(e));
    }
  }

  const PointedDiGraph& network() const noexcept { return network_; }
  const Object& generator(EdgeId e) const {
    auto it = generators_.find(e);
    if (it == generators_.end()) throw Error(Errc::UnknownEdge, "edge " + std::to_string(e));
    return it->second;
  }
  const std::map<EdgeId, Object>& generators() const noexcept { return generators_; }
  const Object& zero() const noexcept { return zero_; }

  /// Sum over subset minus the base edge; the empty sum is the zero object.
  Object eval(std::span<const EdgeId> subset) const {
    std::set<EdgeId> ids;
    for (EdgeId e : subset) {
      if (!network_.graph.has_edge(e)) throw Error(Errc::UnknownEdge, "edge " + std::to_string(e));
      if (e != network_.star_edge) ids.insert(e);
    }
    if (ids.empty()) return zero_;
    auto it = ids.begin();
    Object acc = generators_.at(*it);
    for (++it; it != ids.end(); ++it) acc = carrier_sum(acc, generators_.at(*it));
    return acc;
  }

 private:
  PointedDiGraph network_;
  std::map<EdgeId, Object> generators_;
  Object zero_;
};

/// Summing functor on the pointed vertex set, by its values on single vertices.
template <class Object>
struct VertexFunctor {
  std::map<VertexId, Object> values;
  Object zero;

  Object eval(std::span<const VertexId> subset) const {
    std::set<VertexId> ids(subset.begin(), subset.end());
    std::optional<Object> acc;
    for (VertexId v : ids) {
      auto it = values.find(v);
      if (it == values.end()) throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " not in functor");
      acc = acc ? carrier_sum(*acc, it->second) : it->second;
    }
    return acc ? *acc : zero;
  }
};

enum class Endpoint { Source, Target };

/// Edges whose chosen endpoint lies in `vertices` (the base edge included
/// when the base vertex is).
std::vector<EdgeId> preimage(const PointedDiGraph& g, std::span<const VertexId> vertices, Endpoint which);

template <class Object>
VertexFunctor<Object> pushforward(const SummingFunctor<Object>& phi, Endpoint which) {
  VertexFunctor<Object> out{{}, phi.zero()};
  for (VertexId v : phi.network().graph.vertices()) {
    const VertexId one[] = {v};
    out.values.emplace(v, phi.eval(preimage(phi.network(), one, which)));
  }
  return out;
}

struct VertexCheck {
  VertexId vertex = 0;
  bool ok = true;
};

struct EqualizerReport {
  bool ok = true;
  std::vector<VertexCheck> vertices;  // non-base vertices, ascending
};

/// Conservation at every non-base vertex: sum over out-edges equals sum over
/// in-edges, compared on canonical forms.
template <class Object>
EqualizerReport is_in_equalizer(const SummingFunctor<Object>& phi, double tol) {
  EqualizerReport report;
  for (VertexId v : phi.network().network_vertices()) {
    const VertexId one[] = {v};
    const Object out = phi.eval(preimage(phi.network(), one, Endpoint::Source));
    const Object in = phi.eval(preimage(phi.network(), one, Endpoint::Target));
    const bool ok = carrier_equal(out, in, tol);
    report.vertices.push_back({v, ok});
    report.ok = report.ok && ok;
  }
  return report;
}

/// Subgraph given by its edge ids.
using EdgeSet = std::set<EdgeId>;
using DimensionAssignment = std::map<EdgeSet, std::size_t>;

/// dim(g1 ∩ g2) + dim(g1 ∪ g2) == dim(g1) + dim(g2). Throws UndefinedSubgraph
/// when any of the four is missing from the assignment.
bool inclusion_exclusion_check(const DimensionAssignment& assign, const EdgeSet& g1, const EdgeSet& g2);

/// Extremes of S(P_A) / S(P_A') over nested nonempty edge subsets A ⊂ A' of a
/// code-valued functor, using the code probability and Shannon entropy.
/// Pairs with a degenerate code or S(P_A') = 0 are skipped.
struct EntropyBound {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::size_t pairs = 0;
};
EntropyBound entropy_bound_diagnostic(const SummingFunctor<WeightedCode>& phi);

}  // namespace catnet
