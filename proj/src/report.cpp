#include "cdom/report.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace cdom {

using OJson = nlohmann::ordered_json;

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& line : r.lines) out += line + '\n';
  if (r.timing) out += fmt::format("time: {:.3f}s\n", *r.timing);
  return out;
}

std::string render_json(const Report& r) {
  OJson j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["verdicts"] = r.verdicts;
  j["witnesses"] = r.witnesses;
  j["timing"] = r.timing ? OJson(*r.timing) : OJson(nullptr);
  return j.dump(2) + '\n';
}

OJson to_json(VertexSet s) { return s.to_vector(); }

OJson to_json(const MinorWitness& w) {
  OJson sets = OJson::array();
  for (VertexSet b : w.branch_sets) sets.push_back(to_json(b));
  return {{"branch_sets", sets}};
}

OJson to_json(const ComplianceReport& r) {
  OJson j;
  j["k"] = r.k;
  j["verdict"] = r.compliant() ? "compliant" : "non-compliant";
  j["min_k"] = r.min_k ? OJson(*r.min_k) : OJson(nullptr);
  if (r.side) {
    j["side"] = side_name(*r.side);
    j["witness"] = to_json(r.witness);
  }
  return j;
}

OJson to_json(const FilterVerdict& v) {
  OJson j;
  j["pass"] = v.pass;
  if (v.evidence) {
    const auto& e = *v.evidence;
    j["evidence"] = {{"rule", std::string(rule_name(e.rule))},
                     {"side", side_name(e.side)},
                     {"vertices", to_json(e.vertices)},
                     {"measured", e.measured},
                     {"threshold", e.threshold},
                     {"bound", e.upper_bound ? "upper" : "lower"}};
  }
  return j;
}

std::string format_set(VertexSet s) { return fmt::format("{{{}}}", fmt::join(s.to_vector(), ",")); }

std::string side_name(Side s) { return s == Side::Graph ? "graph" : "complement"; }

}  // namespace cdom
