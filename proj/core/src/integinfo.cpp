#include "catnet/integinfo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "catnet/error.hpp"
#include "catnet/rng.hpp"

namespace catnet {

namespace {

using Key = std::vector<std::uint32_t>;

std::size_t unit_count_of(const JointDistribution& p) {
  const std::size_t axes = p.axes().size();
  if (axes == 0 || axes % 2 != 0) throw Error(Errc::AxisMismatch, "expected axes X_1..X_N, Y_1..Y_N");
  return axes / 2;
}

void require_units(const SystemPartition& lam, std::size_t n) {
  if (lam.unit_count() != n) {
    throw Error(Errc::AxisMismatch, "partition covers " + std::to_string(lam.unit_count()) + " units, joint has " +
                                        std::to_string(n));
  }
}

// Mixed-radix index of the listed axes of a coordinate vector.
std::size_t sub_index(const std::vector<std::size_t>& coords, const std::vector<Axis>& axes,
                      const std::vector<std::size_t>& which) {
  std::size_t idx = 0;
  for (std::size_t a : which) idx = idx * axes[a].size + coords[a];
  return idx;
}

std::size_t sub_size(const std::vector<Axis>& axes, const std::vector<std::size_t>& which) {
  std::size_t s = 1;
  for (std::size_t a : which) s *= axes[a].size;
  return s;
}

// Flat indices of the input part, of each block's input part and of each
// block's output part, per outcome.
struct DenseLayout {
  std::size_t units = 0;
  std::vector<std::size_t> x_all;
  std::size_t x_size = 0;
  std::vector<std::vector<std::size_t>> xb, yb;  // [block][outcome]
  std::vector<std::size_t> xb_size, yb_size;
};

DenseLayout layout(const JointDistribution& p, const SystemPartition& lam) {
  DenseLayout out;
  out.units = unit_count_of(p);
  require_units(lam, out.units);
  const auto& axes = p.axes();
  std::vector<std::size_t> xs(out.units);
  std::iota(xs.begin(), xs.end(), 0);
  out.x_size = sub_size(axes, xs);
  const std::size_t nb = lam.blocks().size();
  std::vector<std::vector<std::size_t>> bx(nb), by(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t u : lam.blocks()[b]) {
      bx[b].push_back(u);
      by[b].push_back(out.units + u);
    }
    out.xb_size.push_back(sub_size(axes, bx[b]));
    out.yb_size.push_back(sub_size(axes, by[b]));
  }
  const std::size_t m = p.outcome_count();
  out.x_all.resize(m);
  out.xb.assign(nb, std::vector<std::size_t>(m));
  out.yb.assign(nb, std::vector<std::size_t>(m));
  for (std::size_t o = 0; o < m; ++o) {
    const auto c = p.unflatten(o);
    out.x_all[o] = sub_index(c, axes, xs);
    for (std::size_t b = 0; b < nb; ++b) {
      out.xb[b][o] = sub_index(c, axes, bx[b]);
      out.yb[b][o] = sub_index(c, axes, by[b]);
    }
  }
  return out;
}

double kl_sum(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) throw Error(Errc::SupportViolation, "P has mass outside the support of Q");
    s += p[i] * std::log(p[i] / q[i]);
  }
  return s;
}

Key concat(const Key& a, const Key& b) {
  Key k = a;
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

Key pick(const std::vector<std::uint32_t>& v, const std::vector<std::size_t>& idx) {
  Key k;
  k.reserve(idx.size());
  for (std::size_t i : idx) k.push_back(v[i]);
  return k;
}

}  // namespace

SystemPartition::SystemPartition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {
  std::vector<std::size_t> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(Errc::InvalidArgument, "empty block in partition");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) throw Error(Errc::InvalidArgument, "blocks must be disjoint and cover units 0..N-1");
  }
  if (all.empty()) throw Error(Errc::InvalidArgument, "partition of zero units");
  units_ = all.size();
  std::sort(blocks_.begin(), blocks_.end());
}

SystemPartition SystemPartition::from_labels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> by;
  for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i]].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [l, b] : by) blocks.push_back(std::move(b));
  return SystemPartition(std::move(blocks));
}

SystemPartition SystemPartition::finest(std::size_t units) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < units; ++i) blocks.push_back({i});
  return SystemPartition(std::move(blocks));
}

SystemPartition SystemPartition::single(std::size_t units) {
  std::vector<std::size_t> b(units);
  std::iota(b.begin(), b.end(), 0);
  return SystemPartition({b});
}

std::vector<std::size_t> SystemPartition::labels() const {
  std::vector<std::size_t> out(units_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t u : blocks_[b]) out[u] = b;
  return out;
}

std::vector<SystemPartition> enumerate_partitions(std::size_t units, PartitionSet which) {
  if (units == 0) throw Error(Errc::InvalidArgument, "no units");
  std::vector<SystemPartition> out;
  if (units == 1) return out;
  if (which == PartitionSet::Bipartitions) {
    // unit 0 always in block 0; remaining units choose 0/1, not all 0
    const std::size_t rest = units - 1;
    if (rest >= 63) throw Error(Errc::TooManyUnits, "too many units for bipartitions");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest); ++mask) {
      std::vector<std::size_t> labels(units, 0);
      // most significant bit is unit 1, so masks ascend in label order
      for (std::size_t i = 0; i < rest; ++i) labels[1 + i] = (mask >> (rest - 1 - i)) & 1U;
      out.push_back(SystemPartition::from_labels(labels));
    }
    return out;
  }
  std::vector<std::size_t> rgs(units, 0), maxv(units, 0);
  while (true) {
    if (*std::max_element(rgs.begin(), rgs.end()) >= 1) out.push_back(SystemPartition::from_labels(rgs));
    std::size_t i = units - 1;
    while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < units; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[i];
    }
  }
  return out;
}

SparseJoint to_sparse(const JointDistribution& p) {
  SparseJoint out;
  out.units = unit_count_of(p);
  for (std::size_t o = 0; o < p.outcome_count(); ++o) {
    if (p.probs()[o] <= 0.0) continue;
    const auto c = p.unflatten(o);
    SparseJoint::Entry e;
    for (std::size_t u = 0; u < out.units; ++u) {
      e.x.push_back(static_cast<std::uint32_t>(c[u]));
      e.y.push_back(static_cast<std::uint32_t>(c[out.units + u]));
    }
    e.p = p.probs()[o];
    out.entries.push_back(std::move(e));
  }
  return out;
}

double ii_lambda_sparse(const SparseJoint& p, const SystemPartition& lam) {
  require_units(lam, p.units);
  const auto& blocks = lam.blocks();
  std::map<Key, double> px;
  std::vector<std::map<Key, double>> pxb(blocks.size()), pxyb(blocks.size());
  for (const auto& e : p.entries) {
    px[e.x] += e.p;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Key xb = pick(e.x, blocks[b]);
      pxb[b][xb] += e.p;
      pxyb[b][concat(xb, pick(e.y, blocks[b]))] += e.p;
    }
  }
  double s = 0.0;
  for (const auto& e : p.entries) {
    if (e.p <= 0.0) continue;
    double q = px[e.x];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Key xb = pick(e.x, blocks[b]);
      q *= pxyb[b][concat(xb, pick(e.y, blocks[b]))] / pxb[b][xb];
    }
    s += e.p * std::log(e.p / q);
  }
  return std::max(s, 0.0);
}

double manifold_residual(const JointDistribution& q, const SystemPartition& lam) {
  const DenseLayout lay = layout(q, lam);
  const auto& pr = q.probs();
  std::vector<double> qx(lay.x_size, 0.0);
  for (std::size_t o = 0; o < pr.size(); ++o) qx[lay.x_all[o]] += pr[o];
  double worst = 0.0;
  for (std::size_t b = 0; b < lam.blocks().size(); ++b) {
    const std::size_t ys = lay.yb_size[b];
    std::vector<double> qxy(lay.x_size * ys, 0.0), qxby(lay.xb_size[b] * ys, 0.0), qxb(lay.xb_size[b], 0.0);
    std::vector<std::size_t> x_to_xb(lay.x_size, 0);
    for (std::size_t o = 0; o < pr.size(); ++o) {
      qxy[lay.x_all[o] * ys + lay.yb[b][o]] += pr[o];
      qxby[lay.xb[b][o] * ys + lay.yb[b][o]] += pr[o];
      qxb[lay.xb[b][o]] += pr[o];
      x_to_xb[lay.x_all[o]] = lay.xb[b][o];
    }
    for (std::size_t x = 0; x < lay.x_size; ++x) {
      if (qx[x] <= 0.0) continue;
      const std::size_t xb = x_to_xb[x];
      for (std::size_t y = 0; y < ys; ++y) {
        const double full = qxy[x * ys + y] / qx[x];
        const double part = qxby[xb * ys + y] / qxb[xb];
        worst = std::max(worst, std::abs(full - part));
      }
    }
  }
  return worst;
}

ProjectionResult project(const JointDistribution& p, const SystemPartition& lam, const ProjectionOptions& opts) {
  const DenseLayout lay = layout(p, lam);
  const std::size_t m = p.outcome_count();
  const std::size_t nb = lam.blocks().size();

  std::vector<double> ps = p.probs();
  bool smoothed = false;
  for (double& v : ps) {
    if (v <= 0.0) {
      v += opts.smoothing;
      smoothed = smoothed || opts.smoothing > 0.0;
    }
  }
  const double total = std::accumulate(ps.begin(), ps.end(), 0.0);
  for (double& v : ps) v /= total;

  std::vector<double> px(lay.x_size, 0.0);
  for (std::size_t o = 0; o < m; ++o) px[lay.x_all[o]] += ps[o];
  std::vector<std::vector<double>> pxy(nb), pxb(nb), cond(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t ys = lay.yb_size[b];
    pxy[b].assign(lay.xb_size[b] * ys, 0.0);
    pxb[b].assign(lay.xb_size[b], 0.0);
    cond[b].assign(lay.xb_size[b] * ys, 1.0 / static_cast<double>(ys));
    for (std::size_t o = 0; o < m; ++o) {
      pxy[b][lay.xb[b][o] * ys + lay.yb[b][o]] += ps[o];
      pxb[b][lay.xb[b][o]] += ps[o];
    }
  }

  // The objective separates over blocks given the fixed input marginal, and
  // each block minimizer is the empirical conditional.
  ProjectionResult res{JointDistribution::uniform(p.axes()), 0.0, 0.0, 0.0, 0, smoothed ? opts.smoothing : 0.0};
  bool converged = false;
  while (res.iterations < opts.max_iter) {
    ++res.iterations;
    double change = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t ys = lay.yb_size[b];
      for (std::size_t xb = 0; xb < lay.xb_size[b]; ++xb) {
        if (pxb[b][xb] <= 0.0) continue;
        for (std::size_t y = 0; y < ys; ++y) {
          const double next = pxy[b][xb * ys + y] / pxb[b][xb];
          change = std::max(change, std::abs(next - cond[b][xb * ys + y]));
          cond[b][xb * ys + y] = next;
        }
      }
    }
    if (change <= opts.tol) {
      converged = true;
      break;
    }
  }

  double grad = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t ys = lay.yb_size[b];
    for (std::size_t xb = 0; xb < lay.xb_size[b]; ++xb) {
      if (pxb[b][xb] <= 0.0) continue;
      std::vector<double> g(ys);
      for (std::size_t y = 0; y < ys; ++y) {
        const double c = cond[b][xb * ys + y];
        g[y] = c > 0.0 ? -pxy[b][xb * ys + y] / c : 0.0;
      }
      const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(ys);
      for (double v : g) grad = std::max(grad, std::abs(v - mean));
    }
  }
  res.gradient_norm = grad;
  if (!converged || grad > opts.tol) {
    throw Error(Errc::NoConvergence, "projection did not converge in " + std::to_string(opts.max_iter) + " sweeps");
  }

  std::vector<double> q(m);
  for (std::size_t o = 0; o < m; ++o) {
    double v = px[lay.x_all[o]];
    for (std::size_t b = 0; b < nb; ++b) v *= cond[b][lay.xb[b][o] * lay.yb_size[b] + lay.yb[b][o]];
    q[o] = v;
  }
  const double qs = std::accumulate(q.begin(), q.end(), 0.0);
  for (double& v : q) v /= qs;
  res.q_star = JointDistribution(p.axes(), q);
  res.kl_value = std::max(kl_sum(p.probs(), q), 0.0);
  res.constraint_residual = manifold_residual(res.q_star, lam);
  return res;
}

double ii_lambda(const JointDistribution& p, const SystemPartition& lam, const ProjectionOptions& opts) {
  return project(p, lam, opts).kl_value;
}

IIResult ii(const JointDistribution& p, PartitionSet which, const ProjectionOptions& opts, std::size_t max_units) {
  const std::size_t n = unit_count_of(p);
  if (which == PartitionSet::All && n > max_units) {
    throw Error(Errc::TooManyUnits, std::to_string(n) + " units exceed the partition cap " + std::to_string(max_units));
  }
  IIResult best{0.0, SystemPartition::single(n)};
  bool first = true;
  for (const auto& lam : enumerate_partitions(n, which)) {
    const double v = ii_lambda(p, lam, opts);
    if (first || v < best.value) {
      best = {v, lam};
      first = false;
    }
  }
  return best;
}

IIResult ii_sparse(const SparseJoint& p, PartitionSet which, std::size_t max_units) {
  if (which == PartitionSet::All && p.units > max_units) {
    throw Error(Errc::TooManyUnits, std::to_string(p.units) + " units exceed the partition cap");
  }
  IIResult best{0.0, SystemPartition::single(p.units)};
  bool first = true;
  for (const auto& lam : enumerate_partitions(p.units, which)) {
    const double v = ii_lambda_sparse(p, lam);
    if (first || v < best.value) {
      best = {v, lam};
      first = false;
    }
  }
  return best;
}

PythagoreanReport pythagorean_check(const JointDistribution& p, const SystemPartition& lam, std::size_t r_samples,
                                    std::uint64_t seed) {
  const ProjectionResult proj = project(p, lam);
  const DenseLayout lay = layout(p, lam);
  const std::size_t m = p.outcome_count();
  const std::size_t nb = lam.blocks().size();
  std::vector<double> px(lay.x_size, 0.0);
  for (std::size_t o = 0; o < m; ++o) px[lay.x_all[o]] += proj.q_star.probs()[o];

  PythagoreanReport rep;
  rep.kl_star = proj.kl_value;
  for (std::size_t s = 0; s < r_samples; ++s) {
    Rng rng(stream_seed(seed, s));
    std::vector<std::vector<double>> cond(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t ys = lay.yb_size[b];
      cond[b].resize(lay.xb_size[b] * ys);
      for (std::size_t xb = 0; xb < lay.xb_size[b]; ++xb) {
        double z = 0.0;
        for (std::size_t y = 0; y < ys; ++y) z += cond[b][xb * ys + y] = rng.uniform(0.05, 1.0);
        for (std::size_t y = 0; y < ys; ++y) cond[b][xb * ys + y] /= z;
      }
    }
    std::vector<double> r(m);
    for (std::size_t o = 0; o < m; ++o) {
      double v = px[lay.x_all[o]];
      for (std::size_t b = 0; b < nb; ++b) v *= cond[b][lay.xb[b][o] * lay.yb_size[b] + lay.yb[b][o]];
      r[o] = v;
    }
    const double pr = kl_sum(p.probs(), r);
    const double qr = kl_sum(proj.q_star.probs(), r);
    rep.gap.push_back(pr - proj.kl_value);
    rep.deviation.push_back(pr - proj.kl_value - qr);
  }
  return rep;
}

SparseJoint feedforward_joint(const DiGraph& g, const FeedforwardDynamics& dyn, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps < 1.0)) throw Error(Errc::InvalidProbability, "noise must lie in [0,1)");
  const auto order = kahn_order(g);
  const std::size_t n = g.vertex_count();
  if (n > 20) throw Error(Errc::TooManyUnits, "exact enumeration is limited to 20 nodes");
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[g.vertices()[i]] = i;

  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<std::vector<double>> weight(n);
  std::vector<double> bias(n, 0.0);
  Rng rng(seed);
  for (VertexId v : order) {
    const std::size_t i = pos[v];
    for (EdgeId e : g.in_edges(v)) {
      preds[i].push_back(pos[g.edge(e).source]);
      weight[i].push_back(rng.uniform(-1.0, 1.0));
    }
    bias[i] = rng.uniform(-0.5, 0.5);
  }

  SparseJoint out;
  out.units = n;
  const double px = 1.0 / static_cast<double>(std::uint64_t{1} << n);
  for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << n); ++xs) {
    std::vector<std::uint32_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (xs >> i) & 1U;
    std::vector<std::uint32_t> det(n);
    std::vector<std::size_t> noisy;
    for (std::size_t i = 0; i < n; ++i) {
      if (preds[i].empty()) {
        det[i] = x[i];
        continue;
      }
      noisy.push_back(i);
      if (dyn.rule == NodeRule::Parity) {
        std::uint32_t s = 0;
        for (std::size_t j : preds[i]) s ^= x[j];
        det[i] = s;
      } else {
        double s = bias[i];
        for (std::size_t k = 0; k < preds[i].size(); ++k) s += weight[i][k] * x[preds[i][k]];
        det[i] = s > 0.0 ? 1U : 0U;
      }
    }
    for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << noisy.size()); ++flips) {
      std::vector<std::uint32_t> y = det;
      double pr = px;
      for (std::size_t k = 0; k < noisy.size(); ++k) {
        if ((flips >> k) & 1U) {
          y[noisy[k]] ^= 1U;
          pr *= eps;
        } else {
          pr *= 1.0 - eps;
        }
      }
      if (pr <= 0.0) continue;
      out.entries.push_back({x, y, pr});
    }
  }
  return out;
}

double feedforward_ii(const DiGraph& g, const FeedforwardDynamics& dyn, double eps, std::uint64_t seed) {
  const SparseJoint joint = feedforward_joint(g, dyn, eps, seed);
  std::vector<std::size_t> inputs;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.in_edges(g.vertices()[i]).empty()) inputs.push_back(i);
  const std::size_t slices = std::size_t{1} << inputs.size();
  if (slices < 2) throw Error(Errc::InvalidGraph, "network has no input nodes");

  auto slice_of = [&](const std::vector<std::uint32_t>& s) {
    std::size_t a = 0;
    for (std::size_t k = 0; k < inputs.size(); ++k) a |= static_cast<std::size_t>(s[inputs[k]]) << k;
    return a;
  };
  auto encode = [](const std::vector<std::uint32_t>& s) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) v |= s[i] << i;
    return v + 1;  // 0 is the blank value
  };

  SparseJoint sliced;
  sliced.units = slices;
  for (const auto& e : joint.entries) {
    SparseJoint::Entry s;
    s.x.assign(slices, 0);
    s.y.assign(slices, 0);
    s.x[slice_of(e.x)] = encode(e.x);
    s.y[slice_of(e.y)] = encode(e.y);
    s.p = e.p;
    sliced.entries.push_back(std::move(s));
  }
  return ii_lambda_sparse(sliced, SystemPartition::finest(slices));
}

double recurrent_xor_ii(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(Errc::InvalidProbability, "noise must lie in (0,1)");
  SparseJoint j;
  j.units = 2;
  for (std::uint32_t xa = 0; xa < 2; ++xa) {
    for (std::uint32_t xb = 0; xb < 2; ++xb) {
      const std::uint32_t target = xa ^ xb;
      for (std::uint32_t ya = 0; ya < 2; ++ya) {
        for (std::uint32_t yb = 0; yb < 2; ++yb) {
          const double p = 0.25 * (ya == target ? 1.0 - eps : eps) * (yb == target ? 1.0 - eps : eps);
          j.entries.push_back({{xa, xb}, {ya, yb}, p});
        }
      }
    }
  }
  return ii_lambda_sparse(j, SystemPartition::finest(2));
}

std::vector<HopfieldIIStep> hopfield_ii_trace(const HopfieldSystem& sys, const HopfieldState& initial,
                                              std::size_t steps, double theta_b, double eps, std::uint64_t seed) {
  (void)seed;
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(Errc::InvalidProbability, "flip noise must lie in (0,1); eps = 0 gives a degenerate joint");
  }
  const std::size_t n = sys.edge_count();
  if (n > 10) throw Error(Errc::TooManyUnits, "exact enumeration is limited to 10 edges");
  if (n < 2) throw Error(Errc::TooManyUnits, "integrated information needs at least two edges");
  const PartitionSet which = n > 4 ? PartitionSet::Bipartitions : PartitionSet::All;

  std::vector<HopfieldIIStep> out;
  std::vector<double> alpha = total_weights(initial);
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::uint32_t> b(n);
    for (std::size_t e = 0; e < n; ++e) b[e] = alpha[e] > theta_b ? 1U : 0U;
    SparseJoint joint;
    joint.units = n;
    for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << n); ++xs) {
      std::vector<std::uint32_t> x(n);
      double p = 1.0;
      std::vector<double> masked(n);
      for (std::size_t e = 0; e < n; ++e) {
        x[e] = (xs >> e) & 1U;
        p *= x[e] == b[e] ? 1.0 - eps : eps;
        masked[e] = x[e] ? alpha[e] : 0.0;
      }
      const std::vector<double> next = step_classical(sys, masked);
      std::vector<std::uint32_t> y(n);
      for (std::size_t e = 0; e < n; ++e) y[e] = next[e] > theta_b ? 1U : 0U;
      joint.entries.push_back({std::move(x), std::move(y), p});
    }
    const IIResult r = ii_sparse(joint, which, 10);
    out.push_back({step, r.value, r.mip});
    alpha = step_classical(sys, alpha);
  }
  return out;
}

}  // namespace catnet
