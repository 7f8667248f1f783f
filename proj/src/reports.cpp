#include "kp/reports.hpp"

namespace kp {

using nlohmann::json;

json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json term;
    term["exponents"] = e;
    term["coeff"] = c.get_str();
    terms.push_back(std::move(term));
  }
  return terms;
}

json to_json(const PieriChain& chain) {
  json j;
  j["kind"] = std::string(1, kind_letter(chain.kind));
  j["w"] = chain.base.to_string();
  j["i"] = chain.i;
  json steps = json::array();
  for (const CoverStep& s : chain.steps) steps.push_back(json::array({s.p, s.q}));
  j["steps"] = std::move(steps);
  j["end"] = chain.end().to_string();
  j["length_end"] = chain.end().length();
  return j;
}

json to_json(const KpModuleReport& report) {
  json j;
  j["generator"] = report.generator.to_string();
  j["n"] = report.n;
  j["dimension"] = report.dimension;
  j["character"] = to_json(report.character);
  return j;
}

json to_json(const TriangularityReport& report) {
  json j;
  j["w"] = report.w.to_string();
  j["i"] = report.i;
  j["d"] = report.d;
  j["kind"] = std::string(1, kind_letter(report.kind));
  json ends = json::array();
  for (const PieriChain& chain : report.chains) ends.push_back(chain.end().to_string());
  j["ends"] = std::move(ends);
  json matrix = json::array();
  for (const auto& row : report.nonzero) {
    json r = json::array();
    for (bool entry : row) r.push_back(entry);
    matrix.push_back(std::move(r));
  }
  j["nonzero"] = std::move(matrix);
  json diag = json::array();
  for (const mpq_class& c : report.diagonal) diag.push_back(c.get_str());
  j["diagonal"] = std::move(diag);
  j["ok"] = report.ok();
  return j;
}

json to_json(const FiltrationReport& report) {
  json j;
  j["w"] = report.w.to_string();
  j["i"] = report.i;
  j["d"] = report.d;
  j["kind"] = std::string(1, kind_letter(report.kind));
  json chains = json::array();
  for (const PieriChain& chain : report.chains) chains.push_back(to_json(chain));
  j["chains"] = std::move(chains);
  j["ladder"] = report.ladder;
  json quotients = json::array();
  for (const QuotientInfo& q : report.quotients) {
    json entry;
    entry["end"] = q.end.to_string();
    entry["dim"] = q.dim;
    entry["character"] = to_json(q.character);
    quotients.push_back(std::move(entry));
  }
  j["quotients"] = std::move(quotients);
  j["triangular"] = report.triangular;
  j["verdict"] = report.verdict;
  return j;
}

json to_json(const std::vector<CriterionResult>& results) {
  json j;
  json list = json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    json entry;
    entry["index"] = r.index;
    entry["name"] = r.name;
    entry["pass"] = r.pass;
    entry["cases"] = r.cases;
    entry["seconds"] = r.seconds;
    entry["detail"] = r.detail;
    list.push_back(std::move(entry));
    all = all && r.pass;
  }
  j["criteria"] = std::move(list);
  j["pass"] = all;
  return j;
}

}  // namespace kp
