#include "uqs/json_io.hpp"

#include <stdexcept>
#include <utility>

#include "uqs/version.hpp"

namespace uqs::io {

namespace {

Json complex_to_json(const Amplitude& z) { return Json::array({z.real(), z.imag()}); }

Json flags_to_json(const spectral::ValidityFlags& f) {
  Json j;
  j["small_st"] = f.small_st;
  j["small_lambda_vs_gap"] = f.small_lambda_vs_gap;
  j["small_Delta"] = f.small_delta;
  return j;
}

}  // namespace

Json instance_to_json(const ProblemInstance& inst) {
  Json j;
  j["n"] = inst.n();
  j["target"] = inst.target();
  j["theta"] = Json::array();
  j["s"] = Json::array();
  for (Index i = 0; i < inst.n(); ++i) {
    j["theta"].push_back(inst.spectrum.theta[i]);
    j["s"].push_back(inst.start.s[i]);
  }
  return j;
}

ProblemInstance instance_from_json(const Json& j) {
  for (const char* key : {"n", "target", "theta", "s"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("instance: missing key ") + key);
  const auto n = j["n"].get<Index>();
  const auto target = j["target"].get<Index>();
  if (n < 2) throw std::invalid_argument("instance: n must be at least 2");
  if (!j["theta"].is_array() || Index(j["theta"].size()) != n)
    throw std::invalid_argument("instance: theta must hold n entries");
  if (!j["s"].is_array() || Index(j["s"].size()) != n)
    throw std::invalid_argument("instance: s must hold n entries");
  RealVector theta(n), s(n);
  for (Index i = 0; i < n; ++i) {
    theta[i] = j["theta"][i].get<double>();
    s[i] = j["s"][i].get<double>();
  }
  return make_instance(make_phase_spectrum(std::move(theta), target),
                       make_start_state(std::move(s)));
}

Json prediction_to_json(const spectral::SpectralPrediction& pred) {
  Json j;
  j["lambda_plus"] = pred.lambda_plus;
  j["lambda_minus"] = pred.lambda_minus;
  j["eta"] = pred.eta;
  j["Delta"] = pred.delta_cap;
  j["Q"] = pred.q_peak;
  j["P"] = pred.success_prob;
  j["B"] = pred.moments.B;
  j["Lambda1"] = pred.moments.lambda1;
  j["Lambda2"] = pred.moments.lambda2;
  j["valid"] = flags_to_json(pred.valid);
  j["overlap_s_plus"] = pred.overlap_s_plus;
  j["overlap_s_minus"] = pred.overlap_s_minus;
  j["overlap_t_plus"] = complex_to_json(pred.overlap_t_plus);
  j["overlap_t_minus"] = complex_to_json(pred.overlap_t_minus);
  j["P_order"] = pred.success_order;
  j["cost_estimate"] = pred.cost_estimate;
  j["lambda_band"] = pred.sweep_error;
  return j;
}

Json report_to_json(const oracle::VerificationReport& rep) {
  Json j;
  j["verdict"] = rep.verdict;
  j["in_regime"] = rep.in_regime;
  j["flags"] = flags_to_json(rep.flags);
  j["lambda_plus_exact"] = rep.lambda_plus_exact;
  j["lambda_minus_exact"] = rep.lambda_minus_exact;
  j["checks"] = Json::array();
  for (const oracle::CheckResult& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["error"] = c.error;
    cj["tolerance"] = c.tolerance;
    cj["ok"] = c.ok;
    j["checks"].push_back(std::move(cj));
  }
  j["passed"] = rep.passed;
  return j;
}

Json grover_result_to_json(const grover::GroverSpec& spec, const grover::GroverResult& res) {
  Json j;
  j["n"] = spec.n;
  j["target"] = spec.target;
  j["Q"] = res.q_used;
  j["success_probability"] = res.success_probability;
  return j;
}

Json estimate_to_json(const phasest::PhaseEstimate& est, int m) {
  Json j;
  j["b"] = est.b;
  j["g"] = est.g;
  j["phi_hat"] = est.phi_hat;
  j["M"] = 1L << m;
  j["run_success"] = Json::array();
  j["run_peak"] = Json::array();
  for (int r = 0; r < 4; ++r) {
    j["run_success"].push_back(est.run_success[r]);
    j["run_peak"].push_back(est.run_peak[r]);
  }
  j["chosen_run"] = est.chosen_run;
  j["queries_per_run"] = est.queries_per_run;
  j["succeeded"] = est.succeeded;
  return j;
}

Json run_report(const std::string& command, Json inputs, Json outputs, std::uint64_t seed) {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["inputs"] = std::move(inputs);
  j["outputs"] = std::move(outputs);
  return j;
}

}  // namespace uqs::io
