#include "essspec/report_json.hpp"

namespace essspec {

void to_json(nlohmann::json& j, const LambdaEnclosure& e) {
  j = {{"value", e.value}, {"lower", e.lower}, {"upper", e.upper}};
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"claim", r.claim},
       {"parameters", r.parameters},
       {"candidates_examined", r.candidates_examined},
       {"minimizer_canonical", r.minimizer_canonical},
       {"construction_canonical", r.construction_canonical},
       {"min_lambda1", r.min_lambda1},
       {"extremal_matches", r.extremal_matches},
       {"uniqueness", r.uniqueness},
       {"runtime_ms", r.runtime_ms},
       {"details", r.details}};
}

void to_json(nlohmann::json& j, const CampaignReport& r) {
  j = {{"claim", r.claim},
       {"parameters", r.parameters},
       {"trials", r.trials},
       {"failures", r.failures},
       {"passed", r.passed()},
       {"runtime_ms", r.runtime_ms},
       {"details", r.details}};
}

void to_json(nlohmann::json& j, const SpectralResult& r) {
  j = {{"lambda1", r.lambda1},
       {"lower", r.lower},
       {"upper", r.upper},
       {"iterations", r.iterations},
       {"residual", r.residual},
       {"perron", r.perron}};
}

void to_json(nlohmann::json& j, const ComponentPartition& p) {
  j = nlohmann::json::array();
  for (VertexSet b : p.blocks) j.push_back(b.to_vector());
}

void to_json(nlohmann::json& j, const EssentialCutCertificate& c) {
  j = {{"essential_connectivity", c.size()},
       {"cut", c.cut.to_vector()},
       {"components", c.partition},
       {"nontrivial_blocks", c.nontrivial_blocks}};
}

nlohmann::json deterministic_view(const VerificationReport& r) {
  nlohmann::json j = r;
  j.erase("runtime_ms");
  return j;
}

}  // namespace essspec
