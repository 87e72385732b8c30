#include "uqs/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uqs::spectral {

namespace {

// cot(x/2) via cos/sin; the factory guarantees off-target phases stay away from
// the poles at multiples of 2*pi, but guard anyway.
double half_cot(double x) {
  const double h = 0.5 * x;
  const double s = std::sin(h);
  if (std::abs(s) < 5e-15) throw std::domain_error("half-angle cotangent pole");
  return std::cos(h) / s;
}

}  // namespace

Moments moments(const ProblemInstance& inst) {
  const RealVector& theta = inst.spectrum.theta;
  const RealVector& s = inst.start.s;
  double l1 = 0.0;
  double l2 = 0.0;
  for (Index i = 0; i < theta.size(); ++i) {
    if (i == inst.target()) continue;
    const double w = s[i] * s[i];
    if (w == 0.0) continue;
    const double c = half_cot(theta[i]);
    l1 += w * c;
    l2 += w * c * c;
  }
  Moments m;
  m.lambda1 = l1;
  m.lambda2 = l2;
  m.B = std::sqrt(1.0 + l2);
  return m;
}

SpectralPrediction predict(const ProblemInstance& inst, const ValidityThresholds& thr) {
  SpectralPrediction p;
  p.moments = moments(inst);
  const double st = inst.s_target();
  const double B = p.moments.B;

  // Central eigenphase pair of U: the two roots of
  // (1 + Lambda2) lambda^2 + 2 Lambda1 lambda - 4 st^2 = 0,
  // parametrized by the mixing angle eta with cot(2 eta) = Lambda1 / (2 st B).
  const double cot2eta = p.moments.lambda1 / (2.0 * st * B);
  p.eta = 0.5 * std::atan2(1.0, cot2eta);
  const double t = std::tan(p.eta);
  p.lambda_plus = (2.0 * st / B) * t;
  p.lambda_minus = -(2.0 * st / B) / t;
  p.delta_cap = p.eta - std::numbers::pi / 4.0;

  const double f_plus = std::sin(p.eta);
  const double f_minus = std::cos(p.eta);
  p.overlap_s_plus = f_plus / B;
  p.overlap_s_minus = f_minus / B;
  p.overlap_t_plus = Amplitude(0.0, 1.0) * std::polar(1.0, 0.5 * p.lambda_plus) * f_minus;
  p.overlap_t_minus = Amplitude(0.0, -1.0) * std::polar(1.0, 0.5 * p.lambda_minus) * f_plus;

  const double sin2eta = std::sin(2.0 * p.eta);
  p.q_peak = std::lround(std::numbers::pi * B / (4.0 * st) - 0.5);
  if (sin2eta > 0.0) {
    const double arg = std::numbers::pi / (2.0 * sin2eta);
    p.success_prob = (sin2eta * sin2eta / (B * B)) * std::sin(arg) * std::sin(arg);
  } else {
    p.success_prob = 0.0;
  }
  p.success_order = 1.0 / B;
  p.cost_estimate = static_cast<long>(std::ceil(B * B * B / st));

  // Worst-case deviation of the peak location over the instance family with
  // the same moments: |lambda| stays within a (1 + |Delta|) band of 2 st / B.
  const double band = (2.0 * st / B) * (1.0 + std::abs(p.delta_cap));
  p.sweep_error = band;

  p.valid.small_st = st <= thr.max_s_target;
  p.valid.small_lambda_vs_gap = band <= inst.spectrum.theta_min / thr.gap_margin;
  p.valid.small_delta = std::abs(p.delta_cap) <= thr.max_delta;
  return p;
}

double predicted_alpha_magnitude(const SpectralPrediction& pred, const ProblemInstance& inst,
                                 double q) {
  const double sin2eta = std::sin(2.0 * pred.eta);
  if (std::abs(sin2eta) < 1e-12)
    throw std::domain_error("predicted_alpha_magnitude: degenerate mixing angle");
  const double st = inst.s_target();
  const double B = pred.moments.B;
  const double rate = 2.0 * (q + 0.5) * st / (B * sin2eta);
  return std::abs((sin2eta / B) * std::sin(rate));
}

}  // namespace uqs::spectral
