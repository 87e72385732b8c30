#pragma once

#include "uqs/json_io.hpp"

#include <cstdint>
#include <iosfwd>

namespace uqs::cli {

/// Seeded in-regime instance sampler used by the spectral verification
/// suite: equal off-target mass with random signs, phase magnitudes drawn
/// from +-[20 s_t, pi], rejection on the prediction validity flags.
ProblemInstance random_in_regime_instance(std::uint64_t seed, Index n_lo = 64, Index n_hi = 512,
                                          double st_lo = 0.005, double st_hi = 0.03);

struct SuiteOutcome {
  io::Json report;
  bool passed = false;
};

/// suite is one of "spectral", "grover", "qpe".
SuiteOutcome run_verify_suite(const std::string& suite, int trials, std::uint64_t seed);

/// Entry point shared by the binary and the tests. Exit codes: 0 ok,
/// 1 checks failed, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uqs::cli
