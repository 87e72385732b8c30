#pragma once

#include "uqs/operators.hpp"

#include <cstdint>

namespace uqs::grover {

struct GroverSpec {
  Index n = 0;  // search-space size, >= 2; canonical runs use powers of two >= 4
  Index target = 0;
};

/// theta_t = 0, theta = pi everywhere else, uniform real start state.
ProblemInstance grover_instance(const GroverSpec& spec);

/// round(pi sqrt(N)/4 - 1/2).
long grover_iterations(Index n);

struct GroverResult {
  long q_used = 0;
  double success_probability = 0.0;
};

/// Iterate for grover_iterations(n) steps, report the exact probability of
/// landing on the target.
GroverResult run_grover(const GroverSpec& spec);

struct ShotSummary {
  int shots = 0;
  int hits = 0;
  double estimated_success = 0.0;
};

/// Seeded measurement simulation of the final state.
ShotSummary sample_run(const GroverSpec& spec, int shots, std::uint64_t seed);

}  // namespace uqs::grover
