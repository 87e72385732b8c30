#pragma once

#include "uqs/operators.hpp"

namespace uqs::spectral {

/// Weighted cotangent sums over the off-target phases.
struct Moments {
  double lambda1 = 0.0;  // sum_{i != t} s_i^2 cot(theta_i/2)
  double lambda2 = 0.0;  // sum_{i != t} s_i^2 cot^2(theta_i/2)
  double B = 1.0;        // sqrt(1 + lambda2)
};

struct ValidityThresholds {
  double max_s_target = 0.05;
  double gap_margin = 10.0;  // require (2 s_t/B)(1 + |Delta|) <= theta_min/gap_margin
  double max_delta = 0.25;
};

struct ValidityFlags {
  bool small_st = false;
  bool small_lambda_vs_gap = false;
  bool small_delta = false;
  bool all() const { return small_st && small_lambda_vs_gap && small_delta; }
};

/// Closed-form description of the two central eigenphases of U and the
/// amplification curve they generate.
struct SpectralPrediction {
  Moments moments;
  double eta = 0.0;        // mixing angle in (0, pi/2); cot(2 eta) = Lambda1/(2 s_t B)
  double delta_cap = 0.0;  // Delta = -Lambda1/(4 s_t B); eta - pi/4 to leading order
  double lambda_plus = 0.0;   // small positive eigenphase, (2 s_t/B) tan(eta)
  double lambda_minus = 0.0;  // small negative eigenphase, -(2 s_t/B) cot(eta)
  double overlap_s_plus = 0.0;   // <s|lambda+> = sin(eta)/B
  double overlap_s_minus = 0.0;  // <s|lambda-> = cos(eta)/B
  Amplitude overlap_t_plus;      // +i e^{i lambda+/2} cos(eta)
  Amplitude overlap_t_minus;     // -i e^{i lambda-/2} sin(eta)
  long q_peak = 0;            // iteration count that lands on the peak
  double success_prob = 0.0;  // |alpha(q_peak)|^2 from the closed form
  double success_order = 0.0; // 1/B companion order estimate for the peak
  long cost_estimate = 0;     // ceil(B^3/s_t), order of total work to reach the target
  double sweep_error = 0.0;   // order-s_t error budget across the whole sweep
  ValidityFlags valid;
};

Moments moments(const ProblemInstance& inst);

SpectralPrediction predict(const ProblemInstance& inst, const ValidityThresholds& thr = {});

/// |<t|U^q|s>| from the closed form; q may be fractional.
double predicted_alpha_magnitude(const SpectralPrediction& pred, const ProblemInstance& inst,
                                 double q);

}  // namespace uqs::spectral
