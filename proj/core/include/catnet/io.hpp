#pragma once

#include <string>
#include <vector>

#include "catnet/codes.hpp"
#include "catnet/graph.hpp"
#include "catnet/hopfield.hpp"
#include "catnet/information.hpp"
#include "catnet/simplicial.hpp"
#include "catnet/transitions.hpp"

namespace catnet::io {

// All readers throw Error(ParseError) on malformed input. JSON output uses
// sorted keys and LF line endings.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// {"vertices": [..], "edges": [[id, source, target], ..]}
std::string graph_to_json(const DiGraph& g);
DiGraph graph_from_json(const std::string& text);

/// {"dim_0": [[v], ..], "dim_1": [[u, v], ..], ..}
std::string complex_to_json(const SimplicialComplex& k);

/// dim,birth,death with "inf" for infinite deaths.
std::string bars_to_csv(const std::vector<Bar>& bars);

/// First line "n q"; then one word per line, optionally followed by a tab
/// and its weight. Blank lines and lines starting with '#' are skipped.
WeightedCode code_from_text(const std::string& text);
std::string code_to_text(const WeightedCode& wc);

/// {"states": n, "initial": s, "final": s?, "labels": [{"name", "delay"}],
///  "transitions": [[from, label, to], ..]}
std::string system_to_json(const TransitionSystem& t);
TransitionSystem system_from_json(const std::string& text);

/// {"axes": [{"name", "size"}], "probs": [..]}
std::string distribution_to_json(const JointDistribution& d);
JointDistribution distribution_from_json(const std::string& text);

struct HopfieldSetup {
  HopfieldSystem system;
  HopfieldState initial;
};

/// {"graph": {..}, "coupling": [..], "theta": [code], "initial": [code],
///  "variant": "with_self" | "pure", "inhibitory": bool, "equalizer": bool,
///  "compact": bool, "word_budget": n}
/// where code = {"length", "alphabet", "words": ["01", ..], "weights": [..]}.
HopfieldSetup hopfield_from_json(const std::string& text);

/// Per-edge weighted codes of a state, keyed by edge id.
std::string state_to_json(const HopfieldSystem& sys, const HopfieldState& state);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace catnet::io
