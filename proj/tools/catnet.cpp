#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catnet/codes.hpp"
#include "catnet/error.hpp"
#include "catnet/experiments.hpp"
#include "catnet/hopfield.hpp"
#include "catnet/integinfo.hpp"
#include "catnet/io.hpp"
#include "catnet/simplicial.hpp"
#include "catnet/transitions.hpp"
#include "criteria.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace catnet;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_file(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json blocks_json(const SystemPartition& lam) {
  json out = json::array();
  for (const auto& b : lam.blocks()) out.push_back(b);
  return out;
}

std::string blocks_text(const SystemPartition& lam) {
  std::string s;
  for (const auto& b : lam.blocks()) {
    if (!s.empty()) s += '|';
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + std::to_string(b[i]);
  }
  return s;
}

// Row-major matrix, commas or whitespace between entries.
std::vector<double> read_matrix_csv(const std::string& path) {
  std::string text = io::read_file(path);
  for (char& c : text)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(text);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, path + ": bad matrix entry '" + tok + "'");
    }
  }
  return out;
}

struct HopfieldArgs {
  std::string config, graph, coupling, theta, initial, variant = "self";
  bool inhibitory = false, equalizer = false, compact = false;
};

void add_hopfield_flags(CLI::App* cmd, HopfieldArgs& a) {
  cmd->add_option("--config", a.config, "JSON config with graph, coupling, theta, initial");
  cmd->add_option("--graph", a.graph, "graph JSON");
  cmd->add_option("--t", a.coupling, "coupling matrix CSV, |E| x |E|, rows by edge id");
  cmd->add_option("--theta", a.theta, "JSON array of weighted codes, one per edge");
  cmd->add_option("--initial", a.initial, "JSON array of weighted codes (default: theta)");
  cmd->add_option("--variant", a.variant)->check(CLI::IsMember({"self", "pure"}));
  cmd->add_flag("--inhibitory", a.inhibitory);
  cmd->add_flag("--equalizer", a.equalizer);
  cmd->add_flag("--compact", a.compact);
}

io::HopfieldSetup load_hopfield(const HopfieldArgs& a) {
  if (!a.config.empty()) return io::hopfield_from_json(io::read_file(a.config));
  if (a.graph.empty() || a.coupling.empty() || a.theta.empty())
    throw Error(Errc::ConfigError, "hopfield needs --config or all of --graph, --t, --theta");
  json cfg;
  try {
    cfg["graph"] = json::parse(io::read_file(a.graph));
    cfg["theta"] = json::parse(io::read_file(a.theta));
    cfg["initial"] = a.initial.empty() ? cfg["theta"] : json::parse(io::read_file(a.initial));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  cfg["coupling"] = read_matrix_csv(a.coupling);
  cfg["variant"] = a.variant == "pure" ? "pure" : "with_self";
  cfg["inhibitory"] = a.inhibitory;
  cfg["equalizer"] = a.equalizer;
  cfg["compact"] = a.compact;
  return io::hopfield_from_json(cfg.dump());
}

CliqueVariant variant_of(const std::string& s) { return s == "path" ? CliqueVariant::Path : CliqueVariant::EdgePair; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catnet: categorical neural network toolkit"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "output file (default stdout)");

  HopfieldArgs hop;
  std::size_t steps = 10;
  std::string emit_kind = "alpha.csv";
  auto* run_cmd = app.add_subcommand("hopfield-run", "iterate the categorical Hopfield dynamics");
  add_hopfield_flags(run_cmd, hop);
  run_cmd->add_option("--steps", steps);
  run_cmd->add_option("--emit", emit_kind)->check(CLI::IsMember({"alpha.csv", "states.json"}));
  run_cmd->add_option("--out", out);

  double theta_b = 0.5, eps = 0.05;
  std::uint64_t seed = 1;
  auto* hii_cmd = app.add_subcommand("hopfield-ii", "integrated information along a Hopfield run");
  add_hopfield_flags(hii_cmd, hop);
  hii_cmd->add_option("--steps", steps);
  hii_cmd->add_option("--theta-b", theta_b, "binarization threshold");
  hii_cmd->add_option("--eps", eps, "flip noise");
  hii_cmd->add_option("--seed", seed);
  hii_cmd->add_option("--out", out);

  std::string dist, partitions = "bi";
  double tol = 1e-8;
  auto* ii_cmd = app.add_subcommand("ii-compute", "integrated information of a joint distribution");
  ii_cmd->add_option("--dist", dist, "distribution JSON over X_1..X_N, Y_1..Y_N")->required();
  ii_cmd->add_option("--partitions", partitions)->check(CLI::IsMember({"bi", "all"}));
  ii_cmd->add_option("--tol", tol);
  ii_cmd->add_option("--out", out);

  std::string config;
  unsigned threads = 0;
  bool summary = false;
  auto* er_cmd = app.add_subcommand("er-ensemble", "Betti numbers of random clique complexes");
  er_cmd->add_option("--config", config)->required();
  er_cmd->add_option("--threads", threads, "0 = hardware concurrency");
  er_cmd->add_flag("--summary", summary, "per-p fractions instead of per-trial rows");
  er_cmd->add_option("--out", out);

  std::string graph_path, clique = "edge_pair", field = "gf2";
  int max_dim = 3;
  bool emit_complex = false;
  auto* ch_cmd = app.add_subcommand("clique-homology", "Betti numbers of a graph's clique complex");
  ch_cmd->add_option("--graph", graph_path)->required();
  ch_cmd->add_option("--max-dim", max_dim);
  ch_cmd->add_option("--variant", clique)->check(CLI::IsMember({"edge_pair", "path", "undirected"}));
  ch_cmd->add_option("--field", field)->check(CLI::IsMember({"gf2", "q"}));
  ch_cmd->add_flag("--complex", emit_complex, "also list the simplices");
  ch_cmd->add_option("--out", out);

  std::string code_path;
  auto* cs_cmd = app.add_subcommand("code-stats", "distance, firing probabilities and nerve of a code");
  cs_cmd->add_option("--code", code_path, "code text file")->required();
  cs_cmd->add_option("--out", out);

  std::size_t word_length = 0;
  auto* tb_cmd = app.add_subcommand("transitions-build", "architecture transition system of a network");
  tb_cmd->add_option("--config", config, "pipeline-style JSON with graph and automata")->required();
  tb_cmd->add_option("--words", word_length, "also extract the code of runs of this length");
  tb_cmd->add_option("--out", out);

  auto* pl_cmd = app.add_subcommand("pipeline", "end-to-end report");
  pl_cmd->add_option("--config", config)->required();
  pl_cmd->add_option("--out", out);

  std::vector<int> only;
  int corrupt = 0;
  auto* rg_cmd = app.add_subcommand("regress", "run the acceptance criteria");
  rg_cmd->add_option("--only", only, "criterion ids");
  rg_cmd->add_option("--corrupt", corrupt, "replace this criterion's tolerance with an impossible one");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      const auto setup = load_hopfield(hop);
      const Trajectory traj = run(setup.system, setup.initial, steps);
      if (emit_kind == "alpha.csv") {
        std::string csv = "step,edge,alpha,classical\n";
        for (std::size_t n = 0; n < traj.alpha.size(); ++n)
          for (std::size_t e = 0; e < setup.system.edge_count(); ++e)
            csv += std::to_string(n) + "," + std::to_string(setup.system.edges()[e]) + "," +
                   io::format_double(traj.alpha[n][e]) + "," + io::format_double(traj.classical[n][e]) + "\n";
        emit(csv, out);
      } else {
        json states = json::array();
        for (const auto& s : traj.states) states.push_back(json::parse(io::state_to_json(setup.system, s)));
        emit(dump(states), out);
      }
    } else if (*hii_cmd) {
      const auto setup = load_hopfield(hop);
      std::string csv = "step,ii,partition\n";
      for (const auto& s : hopfield_ii_trace(setup.system, setup.initial, steps, theta_b, eps, seed))
        csv += std::to_string(s.step) + "," + io::format_double(s.ii) + "," + blocks_text(s.mip) + "\n";
      emit(csv, out);
    } else if (*ii_cmd) {
      const JointDistribution p = io::distribution_from_json(io::read_file(dist));
      ProjectionOptions opts;
      opts.tol = tol;
      const PartitionSet which = partitions == "all" ? PartitionSet::All : PartitionSet::Bipartitions;
      json rows = json::array();
      for (const auto& lam : enumerate_partitions(p.axes().size() / 2, which)) {
        const ProjectionResult r = project(p, lam, opts);
        rows.push_back({{"blocks", blocks_json(lam)},
                        {"ii_lambda", io::format_double(r.kl_value)},
                        {"residual", io::format_double(r.constraint_residual)},
                        {"smoothing", io::format_double(r.smoothing)}});
      }
      const IIResult best = ii(p, which, opts);
      emit(dump({{"ii", io::format_double(best.value)}, {"mip", blocks_json(best.mip)}, {"partitions", rows}}), out);
    } else if (*er_cmd) {
      ErEnsembleConfig cfg = er_config_from_json(io::read_file(config));
      if (er_cmd->count("--threads")) cfg.threads = threads;
      const auto trials = run_er_trials(cfg);
      emit(summary ? er_summary_csv(summarize(trials, cfg), cfg) : er_trials_csv(trials, cfg), out);
    } else if (*ch_cmd) {
      const DiGraph g = io::graph_from_json(io::read_file(graph_path));
      const SimplicialComplex k =
          clique == "undirected" ? flag_complex_undirected(g, max_dim) : directed_flag_complex(g, max_dim, variant_of(clique));
      json f = json::array();
      for (int d = 0; d <= k.dimension(); ++d) f.push_back(k.count(d));
      json report = {{"betti", betti(k, field == "q" ? Field::Q : Field::GF2)},
                     {"euler", euler_characteristic(k)},
                     {"f_vector", f}};
      if (emit_complex) report["complex"] = json::parse(io::complex_to_json(k));
      emit(dump(report), out);
    } else if (*cs_cmd) {
      const WeightedCode wc = io::code_from_text(io::read_file(code_path));
      const Code& c = wc.code;
      json report = {{"length", c.length()},
                     {"alphabet", c.alphabet()},
                     {"size", c.size()},
                     {"min_distance", c.size() < 2 ? json(nullptr) : json(min_distance(c))},
                     {"total_weight", io::format_double(total_weight(wc))}};
      if (c.size() >= 2) {
        report["relative_distance"] = io::format_double(relative_distance_pair(c).first);
      }
      try {
        const auto p = probability(c);
        json probs = json::array();
        for (double x : p) probs.push_back(io::format_double(x));
        report["probability"] = probs;
        report["entropy"] = io::format_double(entropy(p));
      } catch (const Error& e) {
        report["probability"] = nullptr;
        report["probability_error"] = e.what();
      }
      if (c.alphabet() == 2) {
        report["firing_probability"] = io::format_double(binary_firing_probability(c));
        report["nerve_betti"] = betti(code_nerve(c));
      }
      emit(dump(report), out);
    } else if (*tb_cmd) {
      const PipelineConfig cfg = pipeline_config_from_json(io::read_file(config));
      PartMap parts = cfg.parts;
      for (VertexId v : cfg.graph.vertices()) parts.try_emplace(v, TransitionSystem::zero());
      const TransitionSystem t = xi(cfg.graph, parts, cfg.max_summands);
      if (word_length == 0) {
        emit(io::system_to_json(t), out);
      } else {
        json words = json::array();
        const Code code = extract_code(t, word_length);
        for (const Word& w : code.words()) words.push_back(to_string(w));
        emit(dump({{"system", json::parse(io::system_to_json(t))}, {"code", words}}), out);
      }
    } else if (*pl_cmd) {
      emit(run_pipeline(pipeline_config_from_json(io::read_file(config))), out);
    } else if (*rg_cmd) {
      acceptance::SuiteOptions opts;
      opts.only = only;
      opts.corrupt = corrupt;
      const auto results = acceptance::run_regression_suite(opts, std::cout);
      std::size_t failed = 0;
      for (const auto& r : results) failed += !r.pass;
      std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
    }
  } catch (const Error& e) {
    std::cerr << "catnet: " << e.what() << "\n";
    return 2;
  }
  return EXIT_SUCCESS;
}
