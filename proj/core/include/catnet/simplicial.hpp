#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "catnet/codes.hpp"
#include "catnet/graph.hpp"

namespace catnet {

/// Vertex tuple in ascending order.
using Simplex = std::vector<VertexId>;

/// Finite abstract simplicial complex, stored per dimension with every list
/// sorted lexicographically.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Validates face closure (NotFaceClosed) and sortedness of each simplex.
  explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dim);

  /// Downward closure of the given simplices.
  static SimplicialComplex closure(const std::vector<Simplex>& generators);

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const;
  std::size_t size() const;
  std::vector<VertexId> vertices() const;
  bool contains(const Simplex& s) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Keeps simplices of dimension <= k.
  SimplicialComplex skeleton(int k) const;
  bool empty() const noexcept { return by_dim_.empty(); }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

enum class CliqueVariant {
  EdgePair,  // v_i -> v_j is an edge for all i < j
  Path,      // v_i reaches v_j inside the clique, unique source and sink
};

/// Directed flag complex truncated at max_dim. The path variant is closed
/// downward, since a face of a path clique need not be one itself.
/// Throws NotSimple on loops or parallel edges.
SimplicialComplex directed_flag_complex(const DiGraph& g, int max_dim,
                                        CliqueVariant variant = CliqueVariant::EdgePair);

/// Clique complex of the underlying undirected graph.
SimplicialComplex flag_complex_undirected(const DiGraph& g, int max_dim);

/// Downward closure of the supports of the nonzero words; vertices are the
/// digit positions 0..n-1. Throws NonBinary.
SimplicialComplex code_nerve(const Code& c);

/// Disjoint union; vertices of b are shifted past the largest vertex of a.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

enum class Field { GF2, Q };

/// beta_0 .. beta_dim. Empty complex gives an empty list.
std::vector<std::size_t> betti(const SimplicialComplex& k, Field field = Field::GF2);

/// Rank of the boundary map from dimension k to k-1 (0 for k <= 0).
std::size_t boundary_rank(const SimplicialComplex& c, int k, Field field);

long euler_characteristic(const SimplicialComplex& k);

/// Homology stand-in for m-connectedness: beta_0 = 1 and beta_1..beta_m = 0
/// over GF(2). Dimensions above the top of the complex count as zero.
bool connectivity_proxy(const SimplicialComplex& k, int m);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Filtration value per simplex; faces never exceed their cofaces.
class Filtration {
 public:
  /// values[k][i] belongs to complex.simplices(k)[i]. Throws NonMonotone.
  Filtration(SimplicialComplex complex, std::vector<std::vector<double>> values);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  double value(int k, std::size_t i) const { return values_.at(k).at(i); }
  double value(const Simplex& s) const;
  /// Subcomplex of simplices with value <= t.
  SimplicialComplex sublevel(double t) const;

 private:
  SimplicialComplex complex_;
  std::vector<std::vector<double>> values_;
};

struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  friend bool operator==(const Bar&, const Bar&) = default;
};

/// GF(2) persistence by column reduction. Zero-length bars are dropped;
/// output sorted by (dim, birth, death).
std::vector<Bar> persistence(const Filtration& f);

/// Bars of dimension `dim` alive at t: birth <= t < death.
std::size_t bars_alive(const std::vector<Bar>& bars, int dim, double t);

}  // namespace catnet
