#pragma once

#include "uqs/spectral.hpp"

#include <string>
#include <vector>

namespace uqs::oracle {

/// An exact eigenphase of U coupled to the start state, bracketed by the
/// two secular-function poles around it.
struct SecularRoot {
  double lambda = 0.0;      // wrapped to (-pi, pi]
  double bracket_lo = 0.0;  // pole below; the cyclic wrap interval is kept unwrapped
  double bracket_hi = 0.0;  // pole above
  double overlap_s = 0.0;   // <s|lambda>, real positive by convention
};

/// F(lambda) = sum_i s_i^2 cot((lambda - theta_i)/2). Strictly decreasing
/// between consecutive poles.
double secular_value(const ProblemInstance& inst, double lambda);

/// Every eigenphase coupled to |s>: one root per interval between
/// consecutive distinct weighted phases, found by bisection.
std::vector<SecularRoot> secular_roots(const ProblemInstance& inst);

struct CentralRoots {
  SecularRoot plus;   // nearest root above zero
  SecularRoot minus;  // nearest root below zero
};

/// Only the two roots adjacent to the target pole at zero; cheaper than a
/// full enumeration when just lambda+- are needed.
CentralRoots central_roots(const ProblemInstance& inst);

/// Unit eigenvector for a secular root; the global phase is fixed so that
/// <s|lambda> is real positive.
StateVector eigenvector_from_root(const ProblemInstance& inst, double lambda);

struct VerificationTolerances {
  double lambda_factor = 5.0;     // |pred - exact| <= factor*(s_t^2 + exact^2)
  double overlap_factor = 10.0;   // <= factor*max(s_t, |lambda|/theta_min)*exact
  double alpha_max_error = 0.05;  // max over q <= Q of ||alpha_pred| - |alpha_exact||
};

struct CheckResult {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool ok = false;
};

struct VerificationReport {
  spectral::ValidityFlags flags;
  bool in_regime = false;
  std::string verdict;  // "pass", "accuracy_fail" or "out_of_regime"
  double lambda_plus_exact = 0.0;
  double lambda_minus_exact = 0.0;
  std::vector<CheckResult> checks;
  bool passed = false;  // in_regime and every check ok
};

/// Closed form against the exact roots: eigenphases, overlaps and the full
/// amplitude curve up to the predicted peak. Out-of-regime instances are
/// reported as such instead of being held to the accuracy tolerances.
VerificationReport verify_prediction(const ProblemInstance& inst,
                                     const VerificationTolerances& tol = {});

}  // namespace uqs::oracle
