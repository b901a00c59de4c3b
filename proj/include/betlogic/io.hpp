#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "betlogic/neighborhood_model.hpp"
#include "betlogic/probability_model.hpp"
#include "betlogic/synthesis.hpp"

namespace betlogic {

using AnyModel = std::variant<ProbabilityModel, NeighborhoodModel>;

// Model files are JSON:
//   {"kind": "probability" | "neighborhood",
//    "worlds": ["w1", ...],
//    "partition": [["w1", "w2"], ["w3"]],
//    "valuation": {"w1": ["h1"], ...},
//    "weights": {"w1": "1/2", ...},           probability only
//    "generators": [["w1"], ["w3"], ...]}      neighborhood only
// A generator belongs to the cell of its worlds. Errors carry the source
// name and the JSON location.

/// Throws Error (code from the failing constructor, or Io for malformed
/// files).
AnyModel load_model(std::string_view text, const std::string& source = "<input>");
AnyModel load_model_file(const std::string& path);
ProbabilityModel load_probability_model(std::string_view text, const std::string& source = "<input>");
NeighborhoodModel load_neighborhood_model(std::string_view text, const std::string& source = "<input>");

/// Pretty JSON with sorted keys; byte-stable for equal models.
std::string save_model(const ProbabilityModel& m);
std::string save_model(const NeighborhoodModel& m);

std::string read_file(const std::string& path);

/// Comparative statements, one per line: `a c < b d`, `a <= b`, `a = b`.
/// Worlds are single tokens; `{}` denotes the empty set. '#' starts a
/// comment line.
ComparativeRelation parse_comparative(std::string_view text, const std::vector<std::string>& worlds);

namespace corpus {

ProbabilityModel horses();              // three worlds, one cell, 3:2:1
ProbabilityModel horses_split();        // cells {w1, w2}, {w3}, 3:2:1
ProbabilityModel horses_uniform();      // one cell, uniform thirds
/// Horse frame reweighted to (q-p)/2q, p/q, (q-p)/2q; at threshold p/q
/// belief is neither closed under consequence nor veridical at w1.
ProbabilityModel non_closure_model(long p, long q);

NeighborhoodModel walley_fine();
/// X-list and Y-list of the m = 7 (scott) violation, as world-letter strings.
std::vector<std::string> walley_fine_x();
std::vector<std::string> walley_fine_y();

}  // namespace corpus

}  // namespace betlogic
