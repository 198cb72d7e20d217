#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "catnet/error.hpp"
#include "catnet/simplicial.hpp"

namespace catnet {

namespace {

using Column = std::vector<std::size_t>;

std::size_t index_of(const std::vector<Simplex>& list, const Simplex& s) {
  auto it = std::lower_bound(list.begin(), list.end(), s);
  return static_cast<std::size_t>(it - list.begin());
}

// Boundary columns of dimension k, rows indexed into simplices(k-1).
std::vector<Column> boundary_columns(const SimplicialComplex& c, int k) {
  const auto& faces = c.simplices(k - 1);
  std::vector<Column> cols;
  cols.reserve(c.count(k));
  for (const Simplex& s : c.simplices(k)) {
    Column col;
    col.reserve(s.size());
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      col.push_back(index_of(faces, f));
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

void add_mod2(Column& target, const Column& source) {
  Column out;
  out.reserve(target.size() + source.size());
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(), std::back_inserter(out));
  target.swap(out);
}

std::size_t rank_gf2(std::vector<Column> cols) {
  std::unordered_map<std::size_t, std::size_t> pivot;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column& col = cols[j];
    while (!col.empty()) {
      auto it = pivot.find(col.back());
      if (it == pivot.end()) break;
      add_mod2(col, cols[it->second]);
    }
    if (!col.empty()) {
      pivot.emplace(col.back(), j);
      ++rank;
    }
  }
  return rank;
}

std::size_t rank_rational(const SimplicialComplex& c, int k) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = c.count(k - 1), cols = c.count(k);
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols, 0));
  const auto& faces = c.simplices(k - 1);
  const auto& simp = c.simplices(k);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t drop = 0; drop < simp[j].size(); ++drop) {
      Simplex f = simp[j];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      m[index_of(faces, f)][j] = (drop % 2 == 0) ? 1 : -1;
    }
  }
  // fraction-free Bareiss elimination
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t boundary_rank(const SimplicialComplex& c, int k, Field field) {
  if (k <= 0 || k > c.dimension()) return 0;
  return field == Field::GF2 ? rank_gf2(boundary_columns(c, k)) : rank_rational(c, k);
}

std::vector<std::size_t> betti(const SimplicialComplex& k, Field field) {
  const int top = k.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = boundary_rank(k, d, field);
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d) {
    out.push_back(k.count(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]);
  }
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(d));
  return chi;
}

bool connectivity_proxy(const SimplicialComplex& k, int m) {
  const auto b = betti(k, Field::GF2);
  if (b.empty() || b[0] != 1) return false;
  for (int i = 1; i <= m && i < static_cast<int>(b.size()); ++i)
    if (b[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

Filtration::Filtration(SimplicialComplex complex, std::vector<std::vector<double>> values)
    : complex_(std::move(complex)), values_(std::move(values)) {
  const int top = complex_.dimension();
  if (static_cast<int>(values_.size()) != top + 1) throw Error(Errc::DimensionMismatch, "one value list per dimension");
  for (int k = 0; k <= top; ++k) {
    if (values_[static_cast<std::size_t>(k)].size() != complex_.count(k)) {
      throw Error(Errc::DimensionMismatch, "value count differs from simplex count in dimension " + std::to_string(k));
    }
  }
  for (int k = 1; k <= top; ++k) {
    const auto& faces = complex_.simplices(k - 1);
    const auto& simp = complex_.simplices(k);
    for (std::size_t j = 0; j < simp.size(); ++j) {
      for (std::size_t drop = 0; drop < simp[j].size(); ++drop) {
        Simplex f = simp[j];
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
        if (values_[static_cast<std::size_t>(k - 1)][index_of(faces, f)] > values_[static_cast<std::size_t>(k)][j]) {
          throw Error(Errc::NonMonotone, "a face enters after its coface");
        }
      }
    }
  }
}

double Filtration::value(const Simplex& s) const {
  if (!complex_.contains(s)) throw Error(Errc::InvalidArgument, "simplex not in filtration");
  const int k = static_cast<int>(s.size()) - 1;
  return values_[static_cast<std::size_t>(k)][index_of(complex_.simplices(k), s)];
}

SimplicialComplex Filtration::sublevel(double t) const {
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(complex_.dimension() + 1));
  for (int k = 0; k <= complex_.dimension(); ++k) {
    const auto& simp = complex_.simplices(k);
    for (std::size_t j = 0; j < simp.size(); ++j)
      if (values_[static_cast<std::size_t>(k)][j] <= t) by_dim[static_cast<std::size_t>(k)].push_back(simp[j]);
  }
  return SimplicialComplex(std::move(by_dim));
}

std::vector<Bar> persistence(const Filtration& f) {
  const SimplicialComplex& c = f.complex();
  struct Entry {
    double value;
    int dim;
    std::size_t local;
  };
  std::vector<Entry> order;
  for (int k = 0; k <= c.dimension(); ++k)
    for (std::size_t j = 0; j < c.count(k); ++j) order.push_back({f.value(k, j), k, j});
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.value, a.dim, a.local) < std::tie(b.value, b.dim, b.local);
  });
  // global position of every (dim, local) simplex
  std::vector<std::vector<std::size_t>> global(static_cast<std::size_t>(c.dimension() + 1));
  for (int k = 0; k <= c.dimension(); ++k) global[static_cast<std::size_t>(k)].resize(c.count(k));
  for (std::size_t g = 0; g < order.size(); ++g)
    global[static_cast<std::size_t>(order[g].dim)][order[g].local] = g;

  std::vector<Column> cols(order.size());
  for (std::size_t g = 0; g < order.size(); ++g) {
    const int k = order[g].dim;
    if (k == 0) continue;
    const Simplex& s = c.simplices(k)[order[g].local];
    const auto& faces = c.simplices(k - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      cols[g].push_back(global[static_cast<std::size_t>(k - 1)][index_of(faces, face)]);
    }
    std::sort(cols[g].begin(), cols[g].end());
  }

  std::unordered_map<std::size_t, std::size_t> pivot;
  std::vector<bool> paired(order.size(), false);
  std::vector<Bar> bars;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column& col = cols[j];
    while (!col.empty()) {
      auto it = pivot.find(col.back());
      if (it == pivot.end()) break;
      add_mod2(col, cols[it->second]);
    }
    if (col.empty()) continue;
    const std::size_t i = col.back();
    pivot.emplace(i, j);
    paired[i] = paired[j] = true;
    if (order[i].value < order[j].value) bars.push_back({order[i].dim, order[i].value, order[j].value});
  }
  for (std::size_t g = 0; g < order.size(); ++g) {
    if (!paired[g]) bars.push_back({order[g].dim, order[g].value, kInfinity});
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    return std::tie(a.dim, a.birth, a.death) < std::tie(b.dim, b.birth, b.death);
  });
  return bars;
}

std::size_t bars_alive(const std::vector<Bar>& bars, int dim, double t) {
  return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [&](const Bar& b) {
    return b.dim == dim && b.birth <= t && t < b.death;
  }));
}

}  // namespace catnet
