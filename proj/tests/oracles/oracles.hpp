#pragma once

// Independent reference implementations used to check the library. They
// favor obviousness over speed and share no code with core/.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "catnet/graph.hpp"
#include "catnet/information.hpp"
#include "catnet/simplicial.hpp"
#include "catnet/transitions.hpp"

namespace oracle {

using catnet::DiGraph;
using catnet::Simplex;
using catnet::SimplicialComplex;
using catnet::VertexId;

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

/// Row echelon rank over GF(2) on a dense 0/1 matrix.
std::size_t gf2_rank(BitMatrix m);

/// Rank over the integers modulo a large prime; equals the rational rank for
/// the small +-1 boundary matrices used in tests.
std::size_t modp_rank(std::vector<std::vector<long long>> m);

/// Betti numbers from dense boundary matrices.
std::vector<std::size_t> betti_gf2(const SimplicialComplex& k);
std::vector<std::size_t> betti_rational(const SimplicialComplex& k);

/// Mutual-reachability classes from a Floyd-Warshall closure, each sorted,
/// classes sorted by first element.
std::vector<std::vector<VertexId>> scc_by_reachability(const DiGraph& g);

/// Every topological order, by backtracking.
std::vector<std::vector<VertexId>> all_topological_orders(const DiGraph& g);

/// Every vertex subset of size <= max_dim + 1 that admits an ordering with
/// all forward edges present; permutations tried exhaustively.
std::set<Simplex> directed_cliques(const DiGraph& g, int max_dim);

/// Hopfield weight recursion with explicit loops.
std::vector<std::vector<double>> hopfield_weights(const std::vector<std::vector<double>>& t,
                                                  const std::vector<double>& theta, std::vector<double> alpha,
                                                  std::size_t steps, bool with_self);

/// Tsallis entropy straight from the definition (Shannon at alpha = 1).
double tsallis(const std::vector<double>& p, double alpha);

/// Lower envelope of KL(P || Q) over Q(x, y) = P(x) q1(y1|x1) q2(y2|x2) for
/// two binary units, by a zooming 17-point lattice on the four conditional
/// parameters.
double grid_projection_2unit(const catnet::JointDistribution& p, int zoom_rounds = 8);

/// Language of a transition system as strings: per step the label name or
/// "*" for idle, then "@" and the target state.
std::set<std::vector<std::string>> runs(const catnet::TransitionSystem& t, std::size_t n);

/// max m/n with n a >= m b componentwise, enumerating m up to m_cap.
double conversion_rate_bruteforce(const std::vector<long long>& a, const std::vector<long long>& b, long long n_max,
                                  long long m_cap);

}  // namespace oracle
