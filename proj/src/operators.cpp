#include "uqs/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace uqs {

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(theta + std::numbers::pi, two_pi);
  if (r <= 0.0) r += two_pi;
  return r - std::numbers::pi;
}

PhaseSpectrum make_phase_spectrum(RealVector theta, Index target) {
  const Index n = theta.size();
  if (n < 2) throw std::invalid_argument("phase spectrum: dimension must be at least 2");
  if (target < 0 || target >= n) throw std::out_of_range("phase spectrum: target out of range");
  for (Index i = 0; i < n; ++i) {
    if (!std::isfinite(theta[i])) throw std::invalid_argument("phase spectrum: non-finite phase");
    theta[i] = wrap_angle(theta[i]);
  }
  if (theta[target] != 0.0)
    throw std::invalid_argument("phase spectrum: target phase must be exactly zero");
  double tmin = std::numbers::pi;
  for (Index i = 0; i < n; ++i) {
    if (i == target) continue;
    tmin = std::min(tmin, std::abs(theta[i]));
  }
  if (!(tmin > 0.0))
    throw std::invalid_argument("phase spectrum: off-target phases must be nonzero");
  return {std::move(theta), target, tmin};
}

StartState make_start_state(RealVector s) {
  if (s.size() < 2) throw std::invalid_argument("start state: dimension must be at least 2");
  if (!s.allFinite()) throw std::invalid_argument("start state: non-finite amplitude");
  if (std::abs(s.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("start state: amplitudes are not normalized");
  return {std::move(s)};
}

ProblemInstance make_instance(PhaseSpectrum spectrum, StartState start) {
  if (spectrum.theta.size() != start.s.size())
    throw std::invalid_argument("instance: spectrum and start state sizes differ");
  if (start.s[spectrum.target] < 0.0)
    throw std::invalid_argument("instance: target start amplitude must be nonnegative");
  return {std::move(spectrum), std::move(start)};
}

StateVector unit_phases(const RealVector& theta) {
  StateVector f(theta.size());
  for (Index i = 0; i < theta.size(); ++i) f[i] = std::polar(1.0, theta[i]);
  return f;
}

StateVector apply_phases(const RealVector& theta, const StateVector& v) {
  if (theta.size() != v.size()) throw std::invalid_argument("apply_phases: dimension mismatch");
  return unit_phases(theta).cwiseProduct(v);
}

StateVector apply_diagonal(const PhaseSpectrum& spec, const StateVector& v) {
  return apply_phases(spec.theta, v);
}

StateVector apply_reflection(const StartState& start, const StateVector& v) {
  if (start.s.size() != v.size())
    throw std::invalid_argument("apply_reflection: dimension mismatch");
  const StateVector s = start.s.cast<Amplitude>();
  return v - 2.0 * s.dot(v) * s;
}

StateVector apply_U(const ProblemInstance& inst, const StateVector& v) {
  return apply_reflection(inst.start, apply_diagonal(inst.spectrum, v));
}

StateVector iterate_U(const ProblemInstance& inst, long q) {
  if (q < 0) throw std::invalid_argument("iterate_U: negative iteration count");
  const StateVector phases = unit_phases(inst.spectrum.theta);
  const StateVector s = inst.start.s.cast<Amplitude>();
  StateVector v = s;
  for (long k = 0; k < q; ++k) {
    v = phases.cwiseProduct(v);
    v -= 2.0 * s.dot(v) * s;
  }
  return v;
}

Amplitude amplitude_on_target(const ProblemInstance& inst, long q) {
  return iterate_U(inst, q)[inst.target()];
}

StateVector target_amplitude_curve(const ProblemInstance& inst, long q_max) {
  if (q_max < 0) throw std::invalid_argument("target_amplitude_curve: negative iteration count");
  const StateVector phases = unit_phases(inst.spectrum.theta);
  const StateVector s = inst.start.s.cast<Amplitude>();
  StateVector curve(q_max + 1);
  StateVector v = s;
  curve[0] = v[inst.target()];
  for (long q = 1; q <= q_max; ++q) {
    v = phases.cwiseProduct(v);
    v -= 2.0 * s.dot(v) * s;
    curve[q] = v[inst.target()];
  }
  return curve;
}

}  // namespace uqs
