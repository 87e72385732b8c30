#pragma once

#include "uqs/statevec.hpp"

namespace uqs {

/// Wrap an angle into (-pi, pi].
double wrap_angle(double theta);

/// Diagonal phase spectrum with a unique zero entry at `target`.
struct PhaseSpectrum {
  RealVector theta;       // radians, each wrapped to (-pi, pi]
  Index target = 0;       // the sole index with theta == 0
  double theta_min = 0.0; // min |theta_i| over i != target (the spectral gap)
};

/// Validates, wraps the angles and derives theta_min.
PhaseSpectrum make_phase_spectrum(RealVector theta, Index target);

/// Real start amplitudes, unit 2-norm.
struct StartState {
  RealVector s;
};

StartState make_start_state(RealVector s);

/// The (G, s, t) triple the iteration is built from.
struct ProblemInstance {
  PhaseSpectrum spectrum;
  StartState start;

  Index n() const { return spectrum.theta.size(); }
  Index target() const { return spectrum.target; }
  double s_target() const { return start.s[spectrum.target]; }
};

/// Cross-checks the two halves: equal lengths, s_t >= 0.
ProblemInstance make_instance(PhaseSpectrum spectrum, StartState start);

/// e^{i theta_i} for each entry.
StateVector unit_phases(const RealVector& theta);

/// Elementwise phase rotation by raw angles; no zero-entry requirement.
StateVector apply_phases(const RealVector& theta, const StateVector& v);

/// G: multiply amplitude i by e^{i theta_i}.
StateVector apply_diagonal(const PhaseSpectrum& spec, const StateVector& v);

/// I_s: v -> v - 2<s|v>s.
StateVector apply_reflection(const StartState& start, const StateVector& v);

/// One step of U = I_s G: the diagonal acts first, then the reflection.
StateVector apply_U(const ProblemInstance& inst, const StateVector& v);

/// U^q |s>.
StateVector iterate_U(const ProblemInstance& inst, long q);

/// <t|U^q|s>.
Amplitude amplitude_on_target(const ProblemInstance& inst, long q);

/// <t|U^q|s> for q = 0..q_max, computed in one sweep.
StateVector target_amplitude_curve(const ProblemInstance& inst, long q_max);

}  // namespace uqs
