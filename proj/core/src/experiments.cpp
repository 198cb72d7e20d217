#include "catnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "catnet/codes.hpp"
#include "catnet/error.hpp"
#include "catnet/hopfield.hpp"
#include "catnet/information.hpp"
#include "catnet/integinfo.hpp"
#include "catnet/rng.hpp"
#include "json.hpp"

namespace catnet {

using nlohmann::json;

namespace {

template <class F>
auto stage(const char* module, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw Error(e.code(), std::string("[") + module + "] " + msg);
  } catch (const json::exception& e) {
    throw Error(Errc::ConfigError, std::string("[") + module + "] " + e.what());
  }
}

json parse_config(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid config: ") + e.what());
  }
}

std::string hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return s;
}

json f_vector(const SimplicialComplex& k) {
  json out = json::array();
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(k.count(d));
  return out;
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<ErTrial> run_er_trials(const ErEnsembleConfig& cfg) {
  if (cfg.max_betti < 0) throw Error(Errc::ConfigError, "max_betti must be >= 0");
  if (cfg.n == 0) throw Error(Errc::ConfigError, "n must be positive");
  const std::size_t total = cfg.ps.size() * cfg.trials;
  std::vector<ErTrial> out(total);
  auto work = [&](std::size_t idx) {
    const std::size_t pi = idx / cfg.trials;
    ErTrial t;
    t.seed = stream_seed(cfg.seed, idx);
    t.n = cfg.n;
    t.p = cfg.ps[pi];
    const DiGraph g = gen_erdos_renyi(cfg.n, t.p, t.seed, ErMode::Undirected);
    const SimplicialComplex k = flag_complex_undirected(g, cfg.max_betti + 1);
    auto b = betti(k);
    b.resize(static_cast<std::size_t>(cfg.max_betti) + 1, 0);
    t.betti = b;
    for (int m = 1; m <= cfg.max_betti; ++m) t.proxy.push_back(connectivity_proxy(k, m));
    out[idx] = std::move(t);
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < total; i += threads) work(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<ErSummary> summarize(const std::vector<ErTrial>& trials, const ErEnsembleConfig& cfg) {
  std::vector<ErSummary> out;
  for (std::size_t pi = 0; pi < cfg.ps.size(); ++pi) {
    ErSummary s;
    s.p = cfg.ps[pi];
    s.proxy_fraction.assign(static_cast<std::size_t>(cfg.max_betti), 0.0);
    std::size_t cycles = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const ErTrial& tr = trials.at(pi * cfg.trials + t);
      ++s.trials;
      for (std::size_t m = 0; m < tr.proxy.size(); ++m) s.proxy_fraction[m] += tr.proxy[m] ? 1.0 : 0.0;
      const bool b1 = tr.betti.size() > 1 && tr.betti[1] > 0;
      const bool b2 = tr.betti.size() <= 2 || tr.betti[2] == 0;
      cycles += b1 && b2;
    }
    if (s.trials) {
      for (double& f : s.proxy_fraction) f /= static_cast<double>(s.trials);
      s.cycle_fraction = static_cast<double>(cycles) / static_cast<double>(s.trials);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string er_trials_csv(const std::vector<ErTrial>& trials, const ErEnsembleConfig& cfg) {
  std::string out = "seed,n,p";
  for (int k = 0; k <= cfg.max_betti; ++k) out += ",b" + std::to_string(k);
  for (int m = 1; m <= cfg.max_betti; ++m) out += ",proxy" + std::to_string(m);
  out += "\n";
  std::vector<const ErTrial*> sorted;
  for (const auto& t : trials) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [](const ErTrial* a, const ErTrial* b) {
    return a->p != b->p ? a->p < b->p : a->seed < b->seed;
  });
  for (const ErTrial* t : sorted) {
    out += std::to_string(t->seed) + "," + std::to_string(t->n) + "," + io::format_double(t->p);
    for (std::size_t b : t->betti) out += "," + std::to_string(b);
    for (bool v : t->proxy) out += v ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

std::string er_summary_csv(const std::vector<ErSummary>& rows, const ErEnsembleConfig& cfg) {
  std::string out = "p,trials";
  for (int m = 1; m <= cfg.max_betti; ++m) out += ",proxy" + std::to_string(m) + "_fraction";
  out += ",cycle_fraction\n";
  for (const auto& r : rows) {
    out += io::format_double(r.p) + "," + std::to_string(r.trials);
    for (double f : r.proxy_fraction) out += "," + io::format_double(f);
    out += "," + io::format_double(r.cycle_fraction) + "\n";
  }
  return out;
}

ErEnsembleConfig er_config_from_json(const std::string& text) {
  const json j = parse_config(text);
  return stage("cli", [&] {
    ErEnsembleConfig cfg;
    cfg.n = j.value("n", cfg.n);
    if (j.contains("p")) {
      const auto& p = j.at("p");
      if (p.is_array()) {
        cfg.ps = p.get<std::vector<double>>();
      } else if (p.is_number()) {
        cfg.ps = {p.get<double>()};
      } else {
        // named regime windows
        const std::string name = p.get<std::string>();
        const double n = static_cast<double>(cfg.n);
        if (name == "k1_window") {
          cfg.ps = {std::cbrt((3.0 * std::log(n) + 5.0) / n)};
        } else if (name == "cycle_regime") {
          cfg.ps = {std::pow(n, -2.0 / 3.0)};
        } else {
          throw Error(Errc::ConfigError, "unknown p schedule '" + name + "'");
        }
      }
    }
    if (cfg.ps.empty()) throw Error(Errc::ConfigError, "er config needs p");
    for (double p : cfg.ps)
      if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::ConfigError, "p must lie in [0,1]");
    cfg.max_betti = j.value("max_betti", cfg.max_betti);
    cfg.trials = j.value("trials", cfg.trials);
    if (!j.contains("seed")) throw Error(Errc::ConfigError, "er config needs an explicit seed");
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.threads = j.value("threads", 0U);
    return cfg;
  });
}

std::string run_er_ensemble(const ErEnsembleConfig& cfg) { return er_trials_csv(run_er_trials(cfg), cfg); }

PipelineConfig pipeline_config_from_json(const std::string& text) {
  const json j = parse_config(text);
  return stage("cli", [&] {
    PipelineConfig cfg;
    cfg.graph = io::graph_from_json(j.at("graph").dump());
    if (j.contains("automata")) {
      for (const auto& [key, entry] : j.at("automata").items()) {
        const VertexId v = std::stoll(key);
        if (!cfg.graph.has_vertex(v)) throw Error(Errc::ConfigError, "automaton for unknown vertex " + key);
        if (entry.is_string()) {
          if (entry.get<std::string>() != "idle") throw Error(Errc::ConfigError, "unknown automaton '" + entry.get<std::string>() + "'");
          cfg.parts.emplace(v, TransitionSystem::zero());
        } else if (entry.contains("integrate_and_fire")) {
          cfg.parts.emplace(v, integrate_and_fire(entry.at("integrate_and_fire").get<int>(), entry.value("leak", false)));
        } else {
          cfg.parts.emplace(v, io::system_from_json(entry.dump()));
        }
      }
    }
    for (VertexId v : cfg.graph.vertices()) cfg.parts.emplace(v, TransitionSystem::zero());
    cfg.word_length = j.value("word_length", cfg.word_length);
    cfg.max_dim = j.value("max_dim", cfg.max_dim);
    const std::string variant = j.value("clique_variant", std::string("edge_pair"));
    if (variant == "path") {
      cfg.variant = CliqueVariant::Path;
    } else if (variant != "edge_pair") {
      throw Error(Errc::ConfigError, "unknown clique variant '" + variant + "'");
    }
    if (j.contains("hopfield")) cfg.hopfield_json = j.at("hopfield").dump();
    if (j.contains("ii")) {
      const auto& ii = j.at("ii");
      cfg.ii_steps = ii.value("steps", cfg.ii_steps);
      cfg.theta_b = ii.value("theta_b", cfg.theta_b);
      cfg.eps = ii.value("eps", cfg.eps);
    }
    cfg.max_summands = j.value("max_summands", cfg.max_summands);
    if (!j.contains("seed")) throw Error(Errc::ConfigError, "pipeline config needs an explicit seed");
    cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
  });
}

std::string run_pipeline(const PipelineConfig& cfg) {
  json report;
  report["seed"] = cfg.seed;
  const std::string graph_text = io::graph_to_json(cfg.graph);
  report["graph"] = {{"vertices", cfg.graph.vertex_count()}, {"edges", cfg.graph.edge_count()}, {"hash", hex(fnv1a(graph_text))}};

  PartMap parts = cfg.parts;
  for (VertexId v : cfg.graph.vertices()) parts.try_emplace(v, TransitionSystem::zero());
  const TransitionSystem arch = stage("transitions", [&] { return xi(cfg.graph, parts, cfg.max_summands); });
  const std::string arch_text = io::system_to_json(arch);
  report["architecture"] = {{"states", arch.state_count()},
                            {"labels", arch.labels().size()},
                            {"transitions", arch.transitions().size()},
                            {"hash", hex(fnv1a(arch_text))}};

  const auto words = stage("transitions", [&] { return language_words(arch, cfg.word_length); });
  std::string lang_text;
  for (const RunWord& w : words) {
    for (const Step& s : w) lang_text += s.label ? arch.labels()[*s.label].name : "*";
    lang_text += "\n";
  }
  report["language"] = {{"runs", words.size()}, {"hash", hex(fnv1a(lang_text))}};

  const Code code = stage("codes", [&] { return extract_code(arch, cfg.word_length); });
  json code_words = json::array();
  for (const Word& w : code.words()) code_words.push_back(to_string(w));
  const std::vector<double> prob =
      stage("codes", [&] { return code.size() < 2 ? std::vector<double>{1.0} : probability(code); });
  const double h = stage("information", [&] { return entropy(prob); });
  report["code"] = {{"words", code_words}, {"hash", hex(fnv1a(code_words.dump()))}};
  json prob_json = json::array();
  for (double p : prob) prob_json.push_back(io::format_double(p));
  report["probability"] = {{"values", prob_json}, {"hash", hex(fnv1a(prob_json.dump()))}};
  report["entropy"] = io::format_double(h);

  const SimplicialComplex nerve = stage("simplicial", [&] { return code_nerve(code); });
  report["nerve"] = {{"f_vector", f_vector(nerve)},
                     {"betti", betti(nerve)},
                     {"hash", hex(fnv1a(io::complex_to_json(nerve)))}};

  const SimplicialComplex flag =
      stage("simplicial", [&] { return directed_flag_complex(cfg.graph, cfg.max_dim, cfg.variant); });
  report["flag_complex"] = {{"f_vector", f_vector(flag)},
                            {"betti", betti(flag)},
                            {"hash", hex(fnv1a(io::complex_to_json(flag)))}};

  if (cfg.hopfield_json) {
    const auto setup = stage("hopfield", [&] { return io::hopfield_from_json(*cfg.hopfield_json); });
    const auto trace = stage("integinfo", [&] {
      return hopfield_ii_trace(setup.system, setup.initial, cfg.ii_steps, cfg.theta_b, cfg.eps, cfg.seed);
    });
    json series = json::array();
    for (const auto& s : trace) {
      json mip = json::array();
      for (const auto& b : s.mip.blocks()) mip.push_back(b);
      series.push_back({{"step", s.step}, {"ii", io::format_double(s.ii)}, {"mip", mip}});
    }
    report["hopfield_ii"] = {{"series", series}, {"hash", hex(fnv1a(series.dump()))}};
  } else {
    report["hopfield_ii"] = nullptr;
  }
  return report.dump(2) + "\n";
}

}  // namespace catnet
