#include "uqs/phasest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uqs::phasest {

namespace {

long dim_M(int m) {
  if (m < 2 || m > 24)
    throw std::invalid_argument("phase estimation: m must be in [2, 24]");
  return 1L << m;
}

double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;
  return f;
}

void check_phase(double phi) {
  if (!(phi >= 0.0 && phi < 1.0))
    throw std::invalid_argument("phase estimation: phase must lie in [0, 1)");
}

}  // namespace

BinDecomposition nearest_bin(int m, double phi) {
  const long M = dim_M(m);
  check_phase(phi);
  BinDecomposition bd;
  const double x = phi * double(M);
  long b = static_cast<long>(std::ceil(x - 0.5));  // half-bin ties round down
  double delta = phi - double(b) / double(M);
  if (b == M) {
    b = 0;
    delta = phi - 1.0;
  }
  bd.b = b;
  bd.delta = delta;
  double best = std::numeric_limits<double>::infinity();
  for (int g : {+1, -1, +3, -3}) {
    const double dp = delta - double(g) / (8.0 * double(M));
    if (std::abs(dp) < best) {
      best = std::abs(dp);
      bd.g = g;
      bd.delta_prime = dp;
    }
  }
  return bd;
}

RealVector start_amplitudes(int m) {
  const long M = dim_M(m);
  RealVector s(2 * M);
  const double head = 1.0 / (2.0 * double(M));
  const double tail = std::sqrt((1.0 - 1.0 / (4.0 * double(M))) / double(M));
  s.head(M).setConstant(head);
  s.tail(M).setConstant(tail);
  return s;
}

StateVector build_start_state(int m) { return start_amplitudes(m).cast<Amplitude>(); }

StateVector control_state(int m) {
  const long M = dim_M(m);
  StateVector c(2);
  c[0] = 1.0 / (2.0 * std::sqrt(double(M)));
  c[1] = std::sqrt(1.0 - 1.0 / (4.0 * double(M)));
  return c;
}

RealVector build_G(int m, double phi_eff) {
  const long M = dim_M(m);
  check_phase(phi_eff);
  RealVector phase(2 * M);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (long l = 0; l < M; ++l) phase[l] = two_pi * double(l) / double(M);
  double upper = std::numbers::pi * (1.0 + 2.0 * phi_eff);
  if (upper >= two_pi) upper -= two_pi;
  phase.tail(M).setConstant(upper);
  return phase;
}

std::pair<ProblemInstance, BinDecomposition> analysis_spectrum(int m, double phi_eff) {
  const long M = dim_M(m);
  const BinDecomposition bd = nearest_bin(m, phi_eff);
  RealVector theta(2 * M);
  for (long l = 0; l < M; ++l) {
    long r = l - bd.b;
    if (r > M / 2) r -= M;
    if (r <= -M / 2) r += M;
    // pi * (2r/M) keeps opposite offsets exactly antisymmetric
    theta[l] = std::numbers::pi * (double(2 * r) / double(M));
  }
  theta[bd.b] = 0.0;
  theta.tail(M).setConstant(wrap_angle(std::numbers::pi * (1.0 + 2.0 * bd.delta)));
  PhaseSpectrum spec = make_phase_spectrum(std::move(theta), bd.b);
  spec.theta_min = 2.0 * std::numbers::pi / double(M);
  return {make_instance(std::move(spec), make_start_state(start_amplitudes(m))), bd};
}

double analysis_cot_sum(int m, int p) {
  const long M = dim_M(m);
  if (p < 1) throw std::invalid_argument("analysis_cot_sum: power must be positive");
  if (p % 2 == 1) return 0.0;  // exact cancellation under l -> M - l
  double acc = 0.0;
  for (long r = 1; r < M / 2; ++r) {
    const double a = std::numbers::pi * double(r) / double(M);
    const double c = std::cos(a) / std::sin(a);
    acc += 2.0 * std::pow(c, p);
  }
  return acc;  // the r = M/2 term is cot(pi/2)^p = 0
}

spectral::Moments analysis_moments(int m, double delta_in) {
  const long M = dim_M(m);
  if (std::abs(delta_in) > 0.5 / double(M) + 1e-15)
    throw std::invalid_argument("analysis_moments: |delta| exceeds half a bin");
  const double grid1 = analysis_cot_sum(m, 1) / (4.0 * double(M) * double(M));
  const double grid2 = analysis_cot_sum(m, 2) / (4.0 * double(M) * double(M));
  const double d = -std::numbers::pi * delta_in;
  spectral::Moments mo;
  mo.lambda1 = d + grid1;
  mo.lambda2 = d * d + grid2;
  mo.B = std::sqrt(1.0 + mo.lambda2);
  return mo;
}

long query_count(int m) {
  const long M = dim_M(m);
  return std::lround(std::numbers::pi * kNominalB * double(M) / 2.0 - 0.5);
}

StateVector final_state(int m, double phi_eff, long iterations) {
  if (iterations < 0) throw std::invalid_argument("final_state: negative iteration count");
  const StateVector phases = unit_phases(build_G(m, phi_eff));
  const StateVector s = build_start_state(m);
  StateVector v = s;
  for (long k = 0; k < iterations; ++k) {
    v = phases.cwiseProduct(v);
    v -= 2.0 * s.dot(v) * s;
  }
  return v;
}

PhaseEstimate run_phase_estimation(const PhaseEstimationConfig& cfg) {
  const long M = dim_M(cfg.m);
  if (!cfg.phase_oracle)
    throw std::invalid_argument("run_phase_estimation: missing phase oracle");
  std::array<int, 4> sched = cfg.g_schedule;
  std::sort(sched.begin(), sched.end());
  if (sched != std::array<int, 4>{-3, -1, +1, +3})
    throw std::invalid_argument("run_phase_estimation: schedule must permute {+-1, +-3}");
  const double phi = cfg.phase_oracle();
  check_phase(phi);

  PhaseEstimate est;
  est.queries_per_run = query_count(cfg.m);
  for (int r = 0; r < 4; ++r) {
    const double phi_eff = frac(phi - double(cfg.g_schedule[r]) / (8.0 * double(M)));
    const StateVector v = final_state(cfg.m, phi_eff, est.queries_per_run);
    Index peak = 0;
    est.run_success[r] = v.head(M).cwiseAbs2().maxCoeff(&peak);
    est.run_peak[r] = peak;
  }
  est.chosen_run = 0;
  for (int r = 1; r < 4; ++r)
    if (est.run_success[r] > est.run_success[est.chosen_run]) est.chosen_run = r;
  est.b = est.run_peak[est.chosen_run];
  est.g = cfg.g_schedule[est.chosen_run];
  est.phi_hat = frac(double(est.b) / double(M) + double(est.g) / (8.0 * double(M)));
  est.succeeded = est.run_success[est.chosen_run] >= kSuccessFloor;
  return est;
}

PhaseEstimate estimate_phase(int m, double phi) {
  PhaseEstimationConfig cfg;
  cfg.m = m;
  cfg.phase_oracle = [phi] { return phi; };
  return run_phase_estimation(cfg);
}

ShiftOutcome success_at_shift(int m, double phi, double shift) {
  const BinDecomposition bd = nearest_bin(m, phi);
  const double phi_eff = frac(phi - shift);
  const StateVector v = final_state(m, phi_eff, query_count(m));
  return {bd.b, std::norm(v[bd.b])};
}

std::vector<ResonancePoint> resonance_scan(int m, double phi,
                                           const std::vector<double>& shifts) {
  const long M = dim_M(m);
  std::vector<ResonancePoint> points;
  points.reserve(shifts.size());
  for (double sh : shifts) {
    if (std::abs(sh) > 0.5 / double(M) + 1e-15)
      throw std::out_of_range("resonance_scan: shift exceeds half a bin");
    points.push_back({sh, success_at_shift(m, phi, sh).success});
  }
  return points;
}

}  // namespace uqs::phasest
