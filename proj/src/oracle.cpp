#include "uqs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "uqs/spectral.hpp"

namespace uqs::oracle {

namespace {

constexpr double kPoleMargin = 1e-9;
constexpr double kPoleMerge = 1e-12;

struct Pole {
  double theta;
  double weight;
};

// Distinct phases carrying nonzero start weight, sorted ascending.
std::vector<Pole> weighted_poles(const ProblemInstance& inst) {
  std::vector<Pole> poles;
  const RealVector& theta = inst.spectrum.theta;
  const RealVector& s = inst.start.s;
  for (Index i = 0; i < theta.size(); ++i) {
    const double w = s[i] * s[i];
    if (w == 0.0) continue;
    poles.push_back({theta[i], w});
  }
  std::sort(poles.begin(), poles.end(),
            [](const Pole& a, const Pole& b) { return a.theta < b.theta; });
  std::vector<Pole> merged;
  for (const Pole& p : poles) {
    if (!merged.empty() && p.theta - merged.back().theta < kPoleMerge) {
      merged.back().weight += p.weight;
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

// F is strictly decreasing between consecutive poles, from +inf down to -inf.
// Bisect to machine width; the sign pattern pins the root even when rounding
// makes F non-monotone at the last few ulps.
double bisect_decreasing(const ProblemInstance& inst, double a, double b) {
  double fa = secular_value(inst, a);
  double fb = secular_value(inst, b);
  if (!(fa > 0.0) || !(fb < 0.0)) throw std::runtime_error("secular root: bracket lost");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = secular_value(inst, mid);
    if (fm > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

SecularRoot make_root(const ProblemInstance& inst, double lo, double hi) {
  SecularRoot r;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.lambda = bisect_decreasing(inst, lo, hi);
  // |<s|lambda>|^2 = 1 / sum_i s_i^2 csc^2((lambda - theta_i)/2), evaluated at
  // the numerically resolved root.
  double denom = 0.0;
  const RealVector& theta = inst.spectrum.theta;
  const RealVector& s = inst.start.s;
  for (Index i = 0; i < theta.size(); ++i) {
    const double w = s[i] * s[i];
    if (w == 0.0) continue;
    const double sn = std::sin(0.5 * (r.lambda - theta[i]));
    denom += w / (sn * sn);
  }
  r.overlap_s = 1.0 / std::sqrt(denom);
  return r;
}

}  // namespace

double secular_value(const ProblemInstance& inst, double lambda) {
  const RealVector& theta = inst.spectrum.theta;
  const RealVector& s = inst.start.s;
  double acc = 0.0;
  for (Index i = 0; i < theta.size(); ++i) {
    const double w = s[i] * s[i];
    if (w == 0.0) continue;
    const double h = 0.5 * (lambda - theta[i]);
    const double sn = std::sin(h);
    if (std::abs(sn) < 5e-15) throw std::domain_error("secular_value: evaluation at a pole");
    acc += w * std::cos(h) / sn;
  }
  return acc;
}

std::vector<SecularRoot> secular_roots(const ProblemInstance& inst) {
  const std::vector<Pole> poles = weighted_poles(inst);
  const std::size_t D = poles.size();
  if (D < 2) throw std::invalid_argument("secular_roots: need at least two distinct poles");
  std::vector<SecularRoot> roots;
  roots.reserve(D);
  // One root strictly between each adjacent pole pair, cyclically: the last
  // interval wraps from the top pole around 2*pi to the bottom one.
  for (std::size_t k = 0; k < D; ++k) {
    const double lo = poles[k].theta;
    const double hi = (k + 1 < D) ? poles[k + 1].theta
                                  : poles.front().theta + 2.0 * std::numbers::pi;
    if (hi - lo <= 2.0 * kPoleMargin) continue;
    SecularRoot r = make_root(inst, lo + kPoleMargin, hi - kPoleMargin);
    r.lambda = wrap_angle(r.lambda);
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(),
            [](const SecularRoot& a, const SecularRoot& b) { return a.lambda < b.lambda; });
  return roots;
}

CentralRoots central_roots(const ProblemInstance& inst) {
  const std::vector<Pole> poles = weighted_poles(inst);
  if (poles.size() < 2)
    throw std::invalid_argument("central_roots: need at least two distinct poles");
  // Locate the target pole at theta = 0 and its cyclic neighbours.
  std::size_t zi = poles.size();
  for (std::size_t k = 0; k < poles.size(); ++k) {
    if (std::abs(poles[k].theta) <= 1e-12) {
      zi = k;
      break;
    }
  }
  if (zi == poles.size())
    throw std::invalid_argument("central_roots: no pole at phase zero");
  const double above = (zi + 1 < poles.size()) ? poles[zi + 1].theta
                                               : poles.front().theta + 2.0 * std::numbers::pi;
  const double below = (zi > 0) ? poles[zi - 1].theta
                                : poles.back().theta - 2.0 * std::numbers::pi;
  CentralRoots out;
  out.plus = make_root(inst, kPoleMargin, above - kPoleMargin);
  out.minus = make_root(inst, below + kPoleMargin, -kPoleMargin);
  out.plus.lambda = wrap_angle(out.plus.lambda);
  out.minus.lambda = wrap_angle(out.minus.lambda);
  return out;
}

StateVector eigenvector_from_root(const ProblemInstance& inst, double lambda) {
  const RealVector& theta = inst.spectrum.theta;
  const RealVector& s = inst.start.s;
  const Index n = theta.size();
  StateVector v(n);
  for (Index i = 0; i < n; ++i) {
    const Amplitude denom = 1.0 - std::polar(1.0, theta[i] - lambda);
    if (std::abs(denom) < 1e-12)
      throw std::domain_error("eigenvector_from_root: eigenphase collides with a pole");
    v[i] = s[i] / denom;
  }
  v.normalize();
  // Fix the free global phase so <s|v> is real positive.
  const Amplitude c = inner_product(s.cast<Amplitude>(), v);
  if (std::abs(c) > 0.0) v *= std::conj(c) / std::abs(c);
  return v;
}

VerificationReport verify_prediction(const ProblemInstance& inst,
                                     const VerificationTolerances& tol) {
  VerificationReport rep;
  const spectral::SpectralPrediction pred = spectral::predict(inst);
  rep.flags = pred.valid;
  rep.in_regime = pred.valid.all();

  const CentralRoots exact = central_roots(inst);
  rep.lambda_plus_exact = exact.plus.lambda;
  rep.lambda_minus_exact = exact.minus.lambda;

  const double st = inst.s_target();
  auto add = [&rep](std::string name, double err, double tolerance) {
    rep.checks.push_back({std::move(name), err, tolerance, err <= tolerance});
  };

  const double lp = exact.plus.lambda;
  const double lm = exact.minus.lambda;
  add("lambda_plus", std::abs(pred.lambda_plus - lp),
      tol.lambda_factor * (st * st + lp * lp));
  add("lambda_minus", std::abs(pred.lambda_minus - lm),
      tol.lambda_factor * (st * st + lm * lm));

  // Overlap errors scale with both the start weight and the ratio of the
  // eigenphase to the spectral gap.
  const double tmin = inst.spectrum.theta_min;
  const double scale_p = std::max(st, std::abs(lp) / tmin);
  const double scale_m = std::max(st, std::abs(lm) / tmin);
  add("overlap_s_plus", std::abs(pred.overlap_s_plus - exact.plus.overlap_s),
      tol.overlap_factor * scale_p * exact.plus.overlap_s);
  add("overlap_s_minus", std::abs(pred.overlap_s_minus - exact.minus.overlap_s),
      tol.overlap_factor * scale_m * exact.minus.overlap_s);

  const StateVector vp = eigenvector_from_root(inst, lp);
  const StateVector vm = eigenvector_from_root(inst, lm);
  const double tp_exact = std::abs(vp[inst.target()]);
  const double tm_exact = std::abs(vm[inst.target()]);
  add("overlap_t_plus", std::abs(std::abs(pred.overlap_t_plus) - tp_exact),
      tol.overlap_factor * scale_p * tp_exact);
  add("overlap_t_minus", std::abs(std::abs(pred.overlap_t_minus) - tm_exact),
      tol.overlap_factor * scale_m * tm_exact);

  // Amplitude envelope against direct iteration, up to the predicted peak.
  const long q_max = std::max(pred.q_peak, 1L);
  const StateVector curve = target_amplitude_curve(inst, q_max);
  double worst = 0.0;
  for (long q = 0; q <= q_max; ++q) {
    const double want = spectral::predicted_alpha_magnitude(pred, inst, double(q));
    worst = std::max(worst, std::abs(std::abs(curve[q]) - want));
  }
  add("alpha_curve", worst, tol.alpha_max_error);

  rep.passed = true;
  for (const CheckResult& c : rep.checks) rep.passed = rep.passed && c.ok;
  rep.verdict = rep.in_regime ? (rep.passed ? "pass" : "accuracy_fail") : "out_of_regime";
  return rep;
}

}  // namespace uqs::oracle
