#include "uqs/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uqs/rng.hpp"

namespace uqs::grover {

ProblemInstance grover_instance(const GroverSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("grover: dimension must be at least 2");
  if (spec.target < 0 || spec.target >= spec.n)
    throw std::out_of_range("grover: target out of range");
  RealVector theta = RealVector::Constant(spec.n, std::numbers::pi);
  theta[spec.target] = 0.0;
  RealVector s = RealVector::Constant(spec.n, 1.0 / std::sqrt(double(spec.n)));
  return make_instance(make_phase_spectrum(std::move(theta), spec.target),
                       make_start_state(std::move(s)));
}

long grover_iterations(Index n) {
  if (n < 2) throw std::invalid_argument("grover: dimension must be at least 2");
  return std::lround(std::numbers::pi * std::sqrt(double(n)) / 4.0 - 0.5);
}

GroverResult run_grover(const GroverSpec& spec) {
  const ProblemInstance inst = grover_instance(spec);
  GroverResult res;
  res.q_used = grover_iterations(spec.n);
  const Amplitude alpha = amplitude_on_target(inst, res.q_used);
  res.success_probability = std::norm(alpha);
  return res;
}

ShotSummary sample_run(const GroverSpec& spec, int shots, std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("grover: shots must be positive");
  const ProblemInstance inst = grover_instance(spec);
  const StateVector final_state = iterate_U(inst, grover_iterations(spec.n));
  std::mt19937_64 gen(seed);
  const std::vector<Index> outcomes =
      sample_outcomes(outcome_distribution(final_state), shots, gen);
  ShotSummary sum;
  sum.shots = shots;
  sum.hits = 0;
  for (Index o : outcomes)
    if (o == spec.target) ++sum.hits;
  sum.estimated_success = double(sum.hits) / double(shots);
  return sum;
}

}  // namespace uqs::grover
