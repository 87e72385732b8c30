#pragma once

#include "uqs/spectral.hpp"

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace uqs::phasest {

/// Nominal scale factor used when sizing the per-run iteration count.
inline constexpr double kNominalB = 1.04;

/// Runs whose best in-register peak stays below this are reported failed.
inline constexpr double kSuccessFloor = 0.25;

struct PhaseEstimationConfig {
  int m = 0;                             // estimate bits; M = 2^m
  std::function<double()> phase_oracle;  // yields phi in [0, 1)
  std::array<int, 4> g_schedule{+1, -1, +3, -3};  // any order of {+-1, +-3}
};

struct BinDecomposition {
  long b = 0;               // nearest grid index, phi ~ b/M
  double delta = 0.0;       // phi - b/M, |delta| <= 1/(2M)
  int g = 0;                // grid-shift label in {+-1, +-3}
  double delta_prime = 0.0; // delta - g/(8M), |delta_prime| <= 1/(8M)
};

/// Nearest grid decomposition of phi; half-bin ties keep the smaller index.
BinDecomposition nearest_bin(int m, double phi);

struct PhaseEstimate {
  long b = 0;
  int g = 0;
  double phi_hat = 0.0;  // (b/M + g/(8M)) mod 1
  std::array<double, 4> run_success{};  // best control-0 outcome probability, per run
  std::array<long, 4> run_peak{};       // register index holding that outcome
  int chosen_run = 0;
  long queries_per_run = 0;
  bool succeeded = false;
};

/// Real amplitudes of the (1+m)-qubit start state; the control qubit is the
/// most significant index position, so |c,l> sits at index c*M + l.
RealVector start_amplitudes(int m);

StateVector build_start_state(int m);

/// The 2-dim control-qubit factor of the start state.
StateVector control_state(int m);

/// Raw executable diagonal: phase(0,l) = 2 pi l/M, phase(1,l) = pi + 2 pi phi_eff,
/// everything mod 2 pi. Never references a bin index.
RealVector build_G(int m, double phi_eff);

/// Analysis-side spectrum relative to the nearest bin of phi_eff; the target
/// is |0, b>. Valid as a ProblemInstance with theta_min = 2 pi/M.
std::pair<ProblemInstance, BinDecomposition> analysis_spectrum(int m, double phi_eff);

/// Closed-form moments Lambda_p = (-pi delta)^p + cot-sum/(4 M^2).
spectral::Moments analysis_moments(int m, double delta_in);

/// sum over l != b of cot^p(pi (l - b)/M), evaluated via the +- pairing so
/// odd powers cancel exactly.
double analysis_cot_sum(int m, int p);

/// Iterations per run: round(pi B M/2 - 1/2) with the nominal B.
long query_count(int m);

/// Start state evolved through `iterations` steps against the raw diagonal
/// at phi_eff.
StateVector final_state(int m, double phi_eff, long iterations);

PhaseEstimate run_phase_estimation(const PhaseEstimationConfig& cfg);

/// Convenience wrapper for a known phi.
PhaseEstimate estimate_phase(int m, double phi);

struct ShiftOutcome {
  long b = 0;           // bin of the unshifted phi
  double success = 0.0; // probability of |0, b> after query_count(m) steps
};

/// Run with the eigenphase shifted by -shift and report the probability of
/// the unshifted target bin. The shift is not bounded here.
ShiftOutcome success_at_shift(int m, double phi, double shift);

struct ResonancePoint {
  double shift = 0.0;
  double success = 0.0;
};

/// success_at_shift over a list of shifts, each within [-1/(2M), 1/(2M)].
std::vector<ResonancePoint> resonance_scan(int m, double phi, const std::vector<double>& shifts);

}  // namespace uqs::phasest
