#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catnet/graph.hpp"
#include "catnet/io.hpp"
#include "catnet/simplicial.hpp"
#include "catnet/transitions.hpp"

namespace catnet {

struct ErEnsembleConfig {
  std::size_t n = 40;
  std::vector<double> ps;
  int max_betti = 2;          // report beta_0..beta_max_betti
  std::size_t trials = 200;   // per p
  std::uint64_t seed = 1;
  unsigned threads = 0;       // 0 = hardware concurrency
};

struct ErTrial {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0.0;
  std::vector<std::size_t> betti;
  std::vector<bool> proxy;  // connectivity_proxy(., m) for m = 1..max_betti
};

struct ErSummary {
  double p = 0.0;
  std::size_t trials = 0;
  std::vector<double> proxy_fraction;  // m = 1..max_betti
  double cycle_fraction = 0.0;         // beta_1 > 0 and beta_2 == 0
};

/// Trials ordered by (p index, trial index). Each trial samples an
/// undirected G(n, p) from its own stream and computes GF(2) Betti numbers
/// of the clique complex.
std::vector<ErTrial> run_er_trials(const ErEnsembleConfig& cfg);
std::vector<ErSummary> summarize(const std::vector<ErTrial>& trials, const ErEnsembleConfig& cfg);

/// CSV with columns seed,n,p,b0..bk,proxy1..proxyk.
std::string er_trials_csv(const std::vector<ErTrial>& trials, const ErEnsembleConfig& cfg);
std::string er_summary_csv(const std::vector<ErSummary>& rows, const ErEnsembleConfig& cfg);

ErEnsembleConfig er_config_from_json(const std::string& text);

/// The ensemble CSV; convenience wrapper.
std::string run_er_ensemble(const ErEnsembleConfig& cfg);

struct PipelineConfig {
  DiGraph graph;
  PartMap parts;            // per vertex; missing vertices get the zero part
  std::size_t word_length = 3;
  int max_dim = 3;
  CliqueVariant variant = CliqueVariant::EdgePair;
  std::optional<std::string> hopfield_json;  // hopfield config, optional
  std::size_t ii_steps = 5;
  double theta_b = 0.5;
  double eps = 0.05;
  std::size_t max_summands = 64;
  std::uint64_t seed = 1;
};

/// Parts are given per vertex as "idle", {"integrate_and_fire": levels,
/// "leak": bool} or a transition-system object.
PipelineConfig pipeline_config_from_json(const std::string& text);

/// JSON report: architecture, language, code, probability and entropy;
/// flag complex and Betti numbers; Hopfield II trace. Every artifact carries
/// an FNV-1a hash of its serialized form.
std::string run_pipeline(const PipelineConfig& cfg);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace catnet
