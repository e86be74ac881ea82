#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdom/compliance.hpp"
#include "cdom/domination.hpp"
#include "cdom/graph.hpp"
#include "cdom/topology.hpp"

namespace cdom {

/// Command output in two renderings. Text is `lines` joined by newlines; JSON
/// is {command, inputs, verdicts, witnesses, timing}. Witnesses are always
/// data a checker can re-verify (vertex lists, branch sets, graph6 strings).
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<nlohmann::ordered_json> verdicts;
  std::vector<nlohmann::ordered_json> witnesses;
  std::vector<std::string> lines;
  /// Wall-clock seconds; left empty unless requested so output stays
  /// byte-for-byte reproducible.
  std::optional<double> timing;
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

nlohmann::ordered_json to_json(VertexSet s);
nlohmann::ordered_json to_json(const MinorWitness& w);
nlohmann::ordered_json to_json(const ComplianceReport& r);
nlohmann::ordered_json to_json(const FilterVerdict& v);

std::string format_set(VertexSet s);
std::string side_name(Side s);

}  // namespace cdom
