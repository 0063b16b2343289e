#pragma once

// JSON documents for arrowed proximity graphs and results, and DOT output.
//
// {
//   "name": "...",
//   "points": [{"id": "p1", "parent": null, "proximate_to": [],
//               "on_fiber": true, "on_special_section": false}, ...],
//   "fibers": {"p1": "f1", ...}
// }

#include "apg/oracle.hpp"
#include "apg/proximity_graph.hpp"
#include "apg/thresholds.hpp"
#include "apg/valuation_invariants.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace apg {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the document and normalizes origin flags, without validating.
/// Throws ParseError on malformed text, unknown fields or wrong types.
ArrowedProximityGraph parse_apg_document(const std::string& text);

/// parse_apg_document followed by validation; throws InvalidGraph.
ArrowedProximityGraph parse_apg(const std::string& text);

/// Reads a file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

Json apg_to_json(const ArrowedProximityGraph& graph);
/// Two-space indented, trailing newline.
std::string serialize_apg(const ArrowedProximityGraph& graph);

std::string emit_dot(const Configuration& config);

/// Integers as JSON numbers when they fit in 64 bits, else as strings;
/// non-integral rationals as "p/q" strings.
Json exact(const Integer& x);
Json exact(const Rational& x);

Json validation_json(const ValidationReport& report);
Json generators_json(const Configuration& config, const GeneratorSet& set);
Json thresholds_json(const Thresholds& t, bool paper_ceil);
Json verdict_json(const Verdict& v, bool paper_ceil);
Json dual_cone_json(const DualConeCheck& check);
Json invariants_json(const Configuration& config, std::size_t chain, const ValuationInvariants& v,
                     const SumIdentity& s);

}  // namespace apg
