#include "catnet/information.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "catnet/error.hpp"

namespace catnet {

JointDistribution::JointDistribution(std::vector<Axis> axes, std::vector<double> probs)
    : axes_(std::move(axes)), probs_(std::move(probs)) {
  std::size_t n = 1;
  for (const Axis& a : axes_) {
    if (a.size == 0) throw Error(Errc::InvalidArgument, "axis '" + a.name + "' is empty");
    n *= a.size;
  }
  if (probs_.size() != n) throw Error(Errc::DimensionMismatch, "probability vector does not match the axes");
  double total = 0.0;
  for (double x : probs_) {
    if (!(x >= 0.0)) throw Error(Errc::InvalidProbability, "negative or NaN probability");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(Errc::InvalidProbability, "probabilities do not sum to 1");
}

JointDistribution JointDistribution::uniform(std::vector<Axis> axes) {
  std::size_t n = 1;
  for (const Axis& a : axes) n *= a.size;
  return JointDistribution(std::move(axes), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::vector<std::size_t> JointDistribution::unflatten(std::size_t index) const {
  std::vector<std::size_t> c(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    c[k] = index % axes_[k].size;
    index /= axes_[k].size;
  }
  return c;
}

std::size_t JointDistribution::flatten(const std::vector<std::size_t>& coords) const {
  if (coords.size() != axes_.size()) throw Error(Errc::DimensionMismatch, "coordinate count");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (coords[k] >= axes_[k].size) throw Error(Errc::InvalidArgument, "coordinate out of range");
    idx = idx * axes_[k].size + coords[k];
  }
  return idx;
}

VariableSpec::VariableSpec(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::map<std::size_t, std::size_t> relabel;
  for (auto& v : map_) {
    auto it = relabel.emplace(v, relabel.size()).first;
    v = it->second;
  }
  values_ = relabel.size();
}

VariableSpec VariableSpec::from_axes(const JointDistribution& d, const std::vector<std::size_t>& axes) {
  for (std::size_t a : axes)
    if (a >= d.axes().size()) throw Error(Errc::AxisMismatch, "axis index out of range");
  std::vector<std::size_t> map(d.outcome_count());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto c = d.unflatten(i);
    std::size_t v = 0;
    for (std::size_t a : axes) v = v * d.axes()[a].size + c[a];
    map[i] = v;
  }
  return VariableSpec(std::move(map));
}

VariableSpec VariableSpec::constant(std::size_t outcomes) { return VariableSpec(std::vector<std::size_t>(outcomes, 0)); }

VariableSpec VariableSpec::identity(std::size_t outcomes) {
  std::vector<std::size_t> map(outcomes);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return VariableSpec(std::move(map));
}

VariableSpec join(const VariableSpec& a, const VariableSpec& b) {
  if (a.outcome_count() != b.outcome_count()) throw Error(Errc::DimensionMismatch, "variables on different spaces");
  std::vector<std::size_t> map(a.outcome_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = a(i) * b.value_count() + b(i);
  return VariableSpec(std::move(map));
}

bool is_coarser(const VariableSpec& coarse, const VariableSpec& fine) {
  if (coarse.outcome_count() != fine.outcome_count()) return false;
  std::vector<std::size_t> image(fine.value_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < fine.outcome_count(); ++i) {
    auto& slot = image[fine(i)];
    if (slot == static_cast<std::size_t>(-1)) slot = coarse(i);
    else if (slot != coarse(i)) return false;
  }
  return true;
}

std::vector<double> pushforward(const VariableSpec& y, const std::vector<double>& p) {
  if (p.size() != y.outcome_count()) throw Error(Errc::DimensionMismatch, "variable and distribution disagree");
  std::vector<double> out(y.value_count(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) out[y(i)] += p[i];
  return out;
}

std::vector<double> conditional(const VariableSpec& y, std::size_t value, const std::vector<double>& p) {
  if (p.size() != y.outcome_count()) throw Error(Errc::DimensionMismatch, "variable and distribution disagree");
  double mass = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (y(i) == value) mass += p[i];
  if (!(mass > 0.0)) throw Error(Errc::InvalidArgument, "conditioning on a null event");
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (y(i) == value) out[i] = p[i] / mass;
  return out;
}

double entropy(const std::vector<double>& p, double alpha) {
  if (!(alpha > 0.0)) throw Error(Errc::InvalidAlpha, "entropy index must be > 0");
  if (alpha == 1.0) {
    double s = 0.0;
    for (double x : p)
      if (x > 0.0) s -= x * std::log(x);
    return s;
  }
  double sum = 0.0;
  for (double x : p)
    if (x > 0.0) sum += std::pow(x, alpha);
  return (1.0 - sum) / (alpha - 1.0);
}

double kl(const std::vector<double>& p, const std::vector<double>& q, double alpha) {
  if (!(alpha > 0.0)) throw Error(Errc::InvalidAlpha, "divergence index must be > 0");
  if (p.size() != q.size()) throw Error(Errc::DimensionMismatch, "distributions differ in size");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) throw Error(Errc::SupportViolation, "p has mass outside the support of q");
    if (alpha == 1.0) {
      sum += p[i] * std::log(p[i] / q[i]);
    } else {
      sum += p[i] * (std::pow(p[i] / q[i], 1.0 - alpha) - 1.0);
    }
  }
  return alpha == 1.0 ? sum : sum / (1.0 - alpha);
}

double sigma_action(const VariableSpec& y, const Cochain0& f, const std::vector<double>& p, double alpha) {
  const auto py = pushforward(y, p);
  double out = 0.0;
  for (std::size_t v = 0; v < py.size(); ++v) {
    if (py[v] <= 0.0) continue;
    out += std::pow(py[v], alpha) * f(conditional(y, v, p));
  }
  return out;
}

double coboundary0(const Cochain0& f, const VariableSpec& x1, const std::vector<double>& p, double alpha) {
  return sigma_action(x1, f, p, alpha) - f(p);
}

double coboundary1(const Cochain1& f, const VariableSpec& x1, const VariableSpec& x2, const std::vector<double>& p,
                   double alpha) {
  const Cochain0 f2 = [&](const std::vector<double>& q) { return f(x2, q); };
  return sigma_action(x1, f2, p, alpha) - f(join(x1, x2), p) + f(x1, p);
}

double coboundary2(const Cochain2& g, const VariableSpec& x1, const VariableSpec& x2, const VariableSpec& x3,
                   const std::vector<double>& p, double alpha) {
  const Cochain0 g23 = [&](const std::vector<double>& q) { return g(x2, x3, q); };
  return sigma_action(x1, g23, p, alpha) - g(join(x1, x2), x3, p) + g(x1, join(x2, x3), p) - g(x1, x2, p);
}

Cochain1 tsallis_cochain(double alpha) {
  if (!(alpha > 0.0)) throw Error(Errc::InvalidAlpha, "entropy index must be > 0");
  return [alpha](const VariableSpec& x, const std::vector<double>& p) { return entropy(pushforward(x, p), alpha); };
}

Cochain1 coboundary_of(const Cochain0& f, double alpha) {
  return [f, alpha](const VariableSpec& x, const std::vector<double>& p) { return coboundary0(f, x, p, alpha); };
}

double conditional_entropy(const VariableSpec& z, const VariableSpec& y, const std::vector<double>& p) {
  const auto py = pushforward(y, p);
  double out = 0.0;
  for (std::size_t v = 0; v < py.size(); ++v) {
    if (py[v] <= 0.0) continue;
    out += py[v] * entropy(pushforward(z, conditional(y, v, p)), 1.0);
  }
  return out;
}

double surjection_deficit(const VariableSpec& pi, const std::vector<double>& p) {
  const auto q = pushforward(pi, p);
  double out = 0.0;
  for (std::size_t v = 0; v < q.size(); ++v)
    if (q[v] > 0.0) out += q[v] * entropy(conditional(pi, v, p), 1.0);
  return out;
}

CodeOutcomes code_to_outcomes(const Code& c) {
  CodeOutcomes out;
  out.outcomes = c.size();
  out.zero = c.zero_index();
  auto make = [&](const std::function<std::size_t(const Word&)>& f) {
    std::vector<std::size_t> map(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) map[i] = f(c.word(i));
    return VariableSpec(std::move(map));
  };
  out.variables.push_back(make([](const Word& w) { return nonzero_count(w); }));
  for (int pos = 0; pos < c.length(); ++pos) {
    out.variables.push_back(make([pos](const Word& w) { return static_cast<std::size_t>(w[static_cast<std::size_t>(pos)]); }));
  }
  return out;
}

SimplicialComplex qx_complex(const Code& c) { return code_nerve(c); }

SimplicialComplex qx_complex(const DiGraph& g, int max_dim, CliqueVariant variant) {
  const SimplicialComplex flag = directed_flag_complex(g, max_dim, variant);
  const auto& vs = g.vertices();
  if (vs.empty()) return flag;
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  std::vector<Word> words{Word(vs.size(), 0)};
  for (int k = 0; k <= flag.dimension(); ++k) {
    for (const Simplex& s : flag.simplices(k)) {
      Word w(vs.size(), 0);
      for (VertexId v : s) w[pos[v]] = 1;
      words.push_back(std::move(w));
    }
  }
  const SimplicialComplex nerve = code_nerve(Code(static_cast<int>(vs.size()), 2, std::move(words)));
  std::vector<Simplex> mapped;
  for (int k = 0; k <= nerve.dimension(); ++k) {
    for (Simplex s : nerve.simplices(k)) {
      for (auto& v : s) v = vs[static_cast<std::size_t>(v)];
      mapped.push_back(std::move(s));
    }
  }
  if (!(SimplicialComplex::closure(mapped) == flag)) {
    throw Error(Errc::InvalidArgument, "clique-code nerve and flag complex disagree");
  }
  return flag;
}

DiGraph support_graph(const Code& c) {
  DiGraph g = DiGraph::with_vertices(static_cast<std::size_t>(c.length()));
  const auto n = static_cast<std::size_t>(c.length());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const Word& w : c.words()) {
        if (w[i] && w[j]) {
          g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
          break;
        }
      }
    }
  }
  return g;
}

}  // namespace catnet
