#pragma once

#include <nlohmann/json.hpp>

#include "essspec/connectivity.hpp"
#include "essspec/spectral.hpp"
#include "essspec/verify.hpp"

namespace essspec {

// Keys are lower snake case and stable. Doubles are written by nlohmann's
// shortest round-trip formatter, so parsing them back is exact.

void to_json(nlohmann::json& j, const LambdaEnclosure& e);
void to_json(nlohmann::json& j, const VerificationReport& r);
void to_json(nlohmann::json& j, const CampaignReport& r);
void to_json(nlohmann::json& j, const SpectralResult& r);
void to_json(nlohmann::json& j, const ComponentPartition& p);
void to_json(nlohmann::json& j, const EssentialCutCertificate& c);

/// The report without runtime_ms, for comparing runs.
nlohmann::json deterministic_view(const VerificationReport& r);

}  // namespace essspec
