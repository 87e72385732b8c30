#pragma once

#include "uqs/grover.hpp"
#include "uqs/oracle.hpp"
#include "uqs/phasest.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace uqs::io {

using Json = nlohmann::ordered_json;

Json instance_to_json(const ProblemInstance& inst);

/// Parses {"n", "target", "theta", "s"}; theta[target] must be exactly zero.
ProblemInstance instance_from_json(const Json& j);

Json prediction_to_json(const spectral::SpectralPrediction& pred);

Json report_to_json(const oracle::VerificationReport& rep);

Json grover_result_to_json(const grover::GroverSpec& spec, const grover::GroverResult& res);

Json estimate_to_json(const phasest::PhaseEstimate& est, int m);

/// Envelope for CLI outputs; identical command, inputs and seed give
/// byte-identical text.
Json run_report(const std::string& command, Json inputs, Json outputs, std::uint64_t seed);

}  // namespace uqs::io
