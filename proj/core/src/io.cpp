#include "catnet/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "catnet/error.hpp"
#include "json.hpp"

namespace catnet::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

json graph_json(const DiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.source, e.target});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

DiGraph graph_of(const json& j) {
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw Error(Errc::ParseError, "edge must be [id, source, target]");
    es.push_back(Edge{e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>()});
  }
  return DiGraph(j.at("vertices").get<std::vector<VertexId>>(), std::move(es));
}

WeightedCode code_of(const json& j) {
  std::vector<std::string> ws = j.at("words").get<std::vector<std::string>>();
  std::vector<Word> words;
  for (const auto& s : ws) words.push_back(parse_word(s));
  Code c(j.at("length").get<int>(), j.value("alphabet", 2), std::move(words));
  std::vector<double> weights = j.contains("weights") ? j.at("weights").get<std::vector<double>>()
                                                      : std::vector<double>(c.size(), 0.0);
  return WeightedCode(std::move(c), std::move(weights));
}

json code_json(const WeightedCode& wc) {
  json words = json::array();
  for (const Word& w : wc.code.words()) words.push_back(to_string(w));
  return {{"length", wc.code.length()}, {"alphabet", wc.code.alphabet()}, {"words", words}, {"weights", wc.weight}};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ConfigError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ConfigError, "cannot write " + path);
  out << contents;
}

std::string format_double(double x) {
  if (x == kInfinity) return "inf";
  if (x == -kInfinity) return "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string graph_to_json(const DiGraph& g) { return dump(graph_json(g)); }

DiGraph graph_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("graph", [&] { return graph_of(j); });
}

std::string complex_to_json(const SimplicialComplex& k) {
  json j = json::object();
  for (int d = 0; d <= k.dimension(); ++d) j["dim_" + std::to_string(d)] = k.simplices(d);
  return dump(j);
}

std::string bars_to_csv(const std::vector<Bar>& bars) {
  std::string out = "dim,birth,death\n";
  for (const Bar& b : bars) {
    out += std::to_string(b.dim) + "," + format_double(b.birth) + "," + format_double(b.death) + "\n";
  }
  return out;
}

WeightedCode code_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, q = 2;
  std::vector<Word> words;
  std::vector<double> weights;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> q)) throw Error(Errc::ParseError, "code header must be 'n q'");
      continue;
    }
    std::string w;
    ls >> w;
    double x = 0.0;
    if (!(ls >> x)) x = 0.0;
    words.push_back(parse_word(w));
    weights.push_back(x);
  }
  if (n < 0) throw Error(Errc::ParseError, "missing code header");
  return WeightedCode(Code(n, q, std::move(words)), std::move(weights));
}

std::string code_to_text(const WeightedCode& wc) {
  std::string out = std::to_string(wc.code.length()) + " " + std::to_string(wc.code.alphabet()) + "\n";
  for (std::size_t i = 0; i < wc.size(); ++i) {
    out += to_string(wc.code.word(i)) + "\t" + format_double(wc.weight[i]) + "\n";
  }
  return out;
}

std::string system_to_json(const TransitionSystem& t) {
  json labels = json::array();
  for (const Label& l : t.labels()) labels.push_back({{"name", l.name}, {"delay", l.delay}});
  json trans = json::array();
  for (const Transition& tr : t.transitions()) trans.push_back({tr.from, tr.label, tr.to});
  json j = {{"states", t.state_count()}, {"initial", t.initial()}, {"labels", labels}, {"transitions", trans}};
  if (t.has_final()) j["final"] = *t.final_state();
  return dump(j);
}

TransitionSystem system_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("transition system", [&] {
    std::vector<Label> labels;
    for (const auto& l : j.at("labels")) {
      if (l.is_string()) {
        labels.push_back(Label{l.get<std::string>(), 0});
      } else {
        labels.push_back(Label{l.at("name").get<std::string>(), l.value("delay", 0)});
      }
    }
    std::vector<Transition> trans;
    for (const auto& t : j.at("transitions")) {
      trans.push_back(Transition{t.at(0).get<StateId>(), t.at(1).get<LabelId>(), t.at(2).get<StateId>()});
    }
    std::optional<StateId> fin;
    if (j.contains("final") && !j.at("final").is_null()) fin = j.at("final").get<StateId>();
    return TransitionSystem(j.at("states").get<std::size_t>(), j.value("initial", StateId{0}), fin,
                            std::move(labels), std::move(trans));
  });
}

std::string distribution_to_json(const JointDistribution& d) {
  json axes = json::array();
  for (const Axis& a : d.axes()) axes.push_back({{"name", a.name}, {"size", a.size}});
  return dump({{"axes", axes}, {"probs", d.probs()}});
}

JointDistribution distribution_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("distribution", [&] {
    std::vector<Axis> axes;
    for (const auto& a : j.at("axes")) axes.push_back(Axis{a.at("name").get<std::string>(), a.at("size").get<std::size_t>()});
    return JointDistribution(std::move(axes), j.at("probs").get<std::vector<double>>());
  });
}

HopfieldSetup hopfield_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("hopfield config", [&] {
    const DiGraph g = graph_of(j.at("graph"));
    HopfieldOptions opts;
    const std::string variant = j.value("variant", std::string("with_self"));
    if (variant == "pure") {
      opts.variant = HopfieldVariant::Pure;
    } else if (variant != "with_self") {
      throw Error(Errc::ConfigError, "unknown variant '" + variant + "'");
    }
    opts.inhibitory = j.value("inhibitory", false);
    opts.equalizer = j.value("equalizer", false);
    opts.word_budget = j.value("word_budget", opts.word_budget);
    opts.compact = j.value("compact", false);
    std::vector<WeightedCode> theta, init;
    for (const auto& c : j.at("theta")) theta.push_back(code_of(c));
    for (const auto& c : j.at("initial")) init.push_back(code_of(c));
    HopfieldSystem sys(g, j.at("coupling").get<std::vector<double>>(), std::move(theta), opts);
    if (init.size() != sys.edge_count()) throw Error(Errc::DimensionMismatch, "one initial code per edge");
    return HopfieldSetup{std::move(sys), HopfieldState{std::move(init), 0}};
  });
}

std::string state_to_json(const HopfieldSystem& sys, const HopfieldState& state) {
  json edges = json::object();
  for (std::size_t i = 0; i < sys.edge_count(); ++i) edges[std::to_string(sys.edges()[i])] = code_json(state.x[i]);
  return dump({{"step", state.step}, {"edges", edges}});
}

}  // namespace catnet::io
