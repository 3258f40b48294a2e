#include "fermicat/json_io.hpp"

#include "json.hpp"

namespace fermicat {

namespace {

nlohmann::ordered_json endpoint_json(const Endpoint& e) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  j.push_back(e.side == Endpoint::Side::Bottom ? "bottom" : "top");
  j.push_back(e.position);
  return j;
}

}  // namespace

std::string morphism_to_json(const Morphism& morphism) {
  nlohmann::ordered_json j;
  j["bottom"] = morphism.bottom().str();
  j["top"] = morphism.top().str();
  if (morphism.source())
    j["source"] = *morphism.source();
  else
    j["source"] = nullptr;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const MorphismTerm& term : morphism.terms()) {
    nlohmann::ordered_json jt;
    jt["coeff"] = term.coeff.str();
    nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
    for (const auto& arc : term.matching.arcs()) {
      nlohmann::ordered_json ja = nlohmann::ordered_json::array();
      ja.push_back(endpoint_json(arc.first));
      ja.push_back(endpoint_json(arc.second));
      arcs.push_back(std::move(ja));
    }
    jt["arcs"] = std::move(arcs);
    nlohmann::ordered_json bubbles;
    bubbles["cw"] = term.bubbles.clockwise;
    bubbles["ccw"] = term.bubbles.counterclockwise;
    jt["bubbles"] = std::move(bubbles);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

}  // namespace fermicat
