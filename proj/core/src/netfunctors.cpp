#include "catnet/netfunctors.hpp"

#include <limits>

namespace catnet {

double canonical_gap(const WeightedCode& a, const WeightedCode& b) {
  std::map<Word, double> diff;
  for (const auto& [w, x] : canonical_form(a)) diff[w] += x;
  for (const auto& [w, x] : canonical_form(b)) diff[w] -= x;
  double gap = 0.0;
  for (const auto& [w, x] : diff) gap = std::max(gap, std::abs(x));
  return gap;
}

std::vector<EdgeId> preimage(const PointedDiGraph& g, std::span<const VertexId> vertices, Endpoint which) {
  std::set<VertexId> vs(vertices.begin(), vertices.end());
  std::vector<EdgeId> out;
  for (const Edge& e : g.graph.edges()) {
    if (vs.count(which == Endpoint::Source ? e.source : e.target)) out.push_back(e.id);
  }
  return out;
}

bool inclusion_exclusion_check(const DimensionAssignment& assign, const EdgeSet& g1, const EdgeSet& g2) {
  EdgeSet meet, join;
  std::set_intersection(g1.begin(), g1.end(), g2.begin(), g2.end(), std::inserter(meet, meet.end()));
  std::set_union(g1.begin(), g1.end(), g2.begin(), g2.end(), std::inserter(join, join.end()));
  auto dim = [&](const EdgeSet& s) {
    auto it = assign.find(s);
    if (it == assign.end()) throw Error(Errc::UndefinedSubgraph, "dimension not assigned on a required subgraph");
    return it->second;
  };
  return dim(meet) + dim(join) == dim(g1) + dim(g2);
}

namespace {

double shannon(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

}  // namespace

EntropyBound entropy_bound_diagnostic(const SummingFunctor<WeightedCode>& phi) {
  const auto edges = phi.network().network_edges();
  const std::size_t m = edges.size();
  if (m > 10) throw Error(Errc::BudgetExceeded, "entropy diagnostic enumerates subsets of at most 10 edges");
  std::vector<std::optional<double>> entropy(std::size_t{1} << m);
  for (std::size_t mask = 1; mask < entropy.size(); ++mask) {
    std::vector<EdgeId> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1U) subset.push_back(edges[i]);
    try {
      entropy[mask] = shannon(probability(phi.eval(subset).code));
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateCode) throw;
    }
  }
  EntropyBound out{std::numeric_limits<double>::infinity(), 0.0, 0};
  for (std::size_t big = 1; big < entropy.size(); ++big) {
    if (!entropy[big] || *entropy[big] <= 0.0) continue;
    for (std::size_t small = (big - 1) & big; small > 0; small = (small - 1) & big) {
      if (!entropy[small]) continue;
      const double r = *entropy[small] / *entropy[big];
      out.lambda_min = std::min(out.lambda_min, r);
      out.lambda_max = std::max(out.lambda_max, r);
      ++out.pairs;
    }
  }
  if (out.pairs == 0) out.lambda_min = 0.0;
  return out;
}

}  // namespace catnet
