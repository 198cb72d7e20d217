#include "catnet/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "catnet/error.hpp"

namespace catnet {

namespace {

const std::vector<Simplex>& empty_list() {
  static const std::vector<Simplex> kEmpty;
  return kEmpty;
}

std::string show(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::vector<std::set<VertexId>> undirected_neighbors(const DiGraph& g, std::map<VertexId, std::size_t>& pos) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  std::vector<std::set<VertexId>> nb(vs.size());
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    nb[pos[e.source]].insert(e.target);
    nb[pos[e.target]].insert(e.source);
  }
  return nb;
}

// Calls visit(clique) for every clique of the underlying undirected graph
// with at most max_size vertices, each as an ascending tuple.
void for_each_undirected_clique(const DiGraph& g, std::size_t max_size,
                                const std::function<void(const Simplex&)>& visit) {
  std::map<VertexId, std::size_t> pos;
  const auto nb = undirected_neighbors(g, pos);
  Simplex current;
  std::function<void(const std::vector<VertexId>&)> grow = [&](const std::vector<VertexId>& cand) {
    for (std::size_t i = 0; i < cand.size(); ++i) {
      current.push_back(cand[i]);
      visit(current);
      if (current.size() < max_size) {
        std::vector<VertexId> next;
        const auto& n = nb[pos[cand[i]]];
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (n.count(cand[j])) next.push_back(cand[j]);
        if (!next.empty()) grow(next);
      }
      current.pop_back();
    }
  };
  grow(g.vertices());
}

void require_simple(const DiGraph& g) {
  if (!g.is_simple()) throw Error(Errc::NotSimple, "clique complexes need a graph without loops or parallel edges");
}

// Path-variant test on an undirected clique: a linear order exists with
// v_i reaching v_j for i < j, and exactly one source and one sink.
bool is_path_clique(const DiGraph& g, const Simplex& s) {
  const std::size_t k = s.size();
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  std::vector<int> indeg(k, 0), outdeg(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    reach[i][i] = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && g.has_arc(s[i], s[j])) {
        reach[i][j] = true;
        ++outdeg[i];
        ++indeg[j];
      }
    }
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (reach[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (reach[m][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!reach[i][j] && !reach[j][i]) return false;
  return std::count(indeg.begin(), indeg.end(), 0) == 1 && std::count(outdeg.begin(), outdeg.end(), 0) == 1;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Simplex>> by_dim) : by_dim_(std::move(by_dim)) {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    auto& list = by_dim_[k];
    for (const Simplex& s : list) {
      if (s.size() != k + 1) throw Error(Errc::InvalidArgument, "simplex " + show(s) + " listed in wrong dimension");
      if (std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) != s.end()) {
        throw Error(Errc::InvalidArgument, "simplex " + show(s) + " is not strictly ascending");
      }
    }
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(Errc::InvalidArgument, "duplicate simplex in dimension " + std::to_string(k));
    }
  }
  for (std::size_t k = 1; k < by_dim_.size(); ++k) {
    for (const Simplex& s : by_dim_[k]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!std::binary_search(by_dim_[k - 1].begin(), by_dim_[k - 1].end(), face)) {
          throw Error(Errc::NotFaceClosed, "face " + show(face) + " of " + show(s) + " missing");
        }
      }
    }
  }
}

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& generators) {
  std::vector<std::set<Simplex>> acc;
  for (Simplex s : generators) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (acc.size() < s.size()) acc.resize(s.size());
    acc[s.size() - 1].insert(std::move(s));
  }
  for (std::size_t k = acc.size(); k-- > 1;) {
    for (const Simplex& s : acc[k]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        acc[k - 1].insert(std::move(face));
      }
    }
  }
  std::vector<std::vector<Simplex>> by_dim(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) by_dim[k].assign(acc[k].begin(), acc[k].end());
  return SimplicialComplex(std::move(by_dim));
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty_list();
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::count(int k) const { return simplices(k).size(); }

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& l : by_dim_) n += l.size();
  return n;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
  std::vector<VertexId> out;
  for (const Simplex& s : simplices(0)) out.push_back(s[0]);
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  const auto& list = simplices(static_cast<int>(s.size()) - 1);
  return std::binary_search(list.begin(), list.end(), s);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& list : by_dim_)
    for (const Simplex& s : list)
      if (!other.contains(s)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  std::vector<std::vector<Simplex>> out;
  for (int d = 0; d <= std::min(k, dimension()); ++d) out.push_back(by_dim_[static_cast<std::size_t>(d)]);
  return SimplicialComplex(std::move(out));
}

SimplicialComplex directed_flag_complex(const DiGraph& g, int max_dim, CliqueVariant variant) {
  if (max_dim < 0) throw Error(Errc::InvalidArgument, "max_dim must be >= 0");
  require_simple(g);
  const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;

  if (variant == CliqueVariant::Path) {
    std::vector<Simplex> gens;
    for_each_undirected_clique(g, max_size, [&](const Simplex& s) {
      if (is_path_clique(g, s)) gens.push_back(s);
    });
    return SimplicialComplex::closure(gens);
  }

  std::map<VertexId, std::set<VertexId>> out;
  for (VertexId v : g.vertices()) out[v];
  for (const Edge& e : g.edges()) out[e.source].insert(e.target);

  std::vector<std::set<Simplex>> acc(max_size);
  std::vector<VertexId> tuple;
  std::function<void(const std::set<VertexId>&)> extend = [&](const std::set<VertexId>& cand) {
    for (VertexId c : cand) {
      tuple.push_back(c);
      Simplex s = tuple;
      std::sort(s.begin(), s.end());
      acc[tuple.size() - 1].insert(std::move(s));
      if (tuple.size() < max_size) {
        std::set<VertexId> next;
        for (VertexId w : cand)
          if (out[c].count(w)) next.insert(w);
        if (!next.empty()) extend(next);
      }
      tuple.pop_back();
    }
  };
  for (VertexId v : g.vertices()) {
    tuple = {v};
    acc[0].insert({v});
    if (max_size > 1 && !out[v].empty()) extend(out[v]);
  }
  std::vector<std::vector<Simplex>> by_dim(max_size);
  for (std::size_t k = 0; k < max_size; ++k) by_dim[k].assign(acc[k].begin(), acc[k].end());
  return SimplicialComplex(std::move(by_dim));
}

SimplicialComplex flag_complex_undirected(const DiGraph& g, int max_dim) {
  if (max_dim < 0) throw Error(Errc::InvalidArgument, "max_dim must be >= 0");
  require_simple(g);
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(max_dim) + 1);
  for_each_undirected_clique(g, by_dim.size(), [&](const Simplex& s) { by_dim[s.size() - 1].push_back(s); });
  return SimplicialComplex(std::move(by_dim));
}

SimplicialComplex code_nerve(const Code& c) {
  if (!c.is_binary()) throw Error(Errc::NonBinary, "code nerve needs a binary code");
  std::vector<Simplex> gens;
  for (const Word& w : c.words()) {
    Simplex s;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) s.push_back(static_cast<VertexId>(i));
    if (!s.empty()) gens.push_back(std::move(s));
  }
  return SimplicialComplex::closure(gens);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  const VertexId shift = (va.empty() ? 0 : va.back() + 1) - (vb.empty() ? 0 : vb.front());
  const int top = std::max(a.dimension(), b.dimension());
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    by_dim[static_cast<std::size_t>(k)] = a.simplices(k);
    for (Simplex s : b.simplices(k)) {
      for (auto& v : s) v += shift;
      by_dim[static_cast<std::size_t>(k)].push_back(std::move(s));
    }
  }
  return SimplicialComplex(std::move(by_dim));
}

}  // namespace catnet
