#include "uqs/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "uqs/grover.hpp"
#include "uqs/phasest.hpp"
#include "uqs/rng.hpp"

namespace uqs::cli {

namespace {

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing output file '" + out_path + "'");
}

void emit_json(const io::Json& j, const std::string& out_path, std::ostream& out) {
  emit_text(j.dump(2) + "\n", out_path, out);
}

io::Json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
  return io::Json::parse(f);
}

/// Shot-based variant of the estimator: the register peak and its success
/// proxy come from sampled outcome counts instead of exact probabilities.
phasest::PhaseEstimate sampled_estimate(int m, double phi, int shots, std::uint64_t seed) {
  const long M = 1L << m;
  const phasest::PhaseEstimationConfig defaults;
  std::mt19937_64 gen(seed);
  phasest::PhaseEstimate est;
  est.queries_per_run = phasest::query_count(m);
  for (int r = 0; r < 4; ++r) {
    double phi_eff = phi - double(defaults.g_schedule[r]) / (8.0 * double(M));
    phi_eff -= std::floor(phi_eff);
    if (phi_eff >= 1.0) phi_eff -= 1.0;
    const StateVector v = phasest::final_state(m, phi_eff, est.queries_per_run);
    const std::vector<Index> outcomes = sample_outcomes(outcome_distribution(v), shots, gen);
    std::vector<long> hist(M, 0);
    for (Index o : outcomes)
      if (o < M) ++hist[o];
    long peak = 0;
    for (long i = 1; i < M; ++i)
      if (hist[i] > hist[peak]) peak = i;
    est.run_peak[r] = peak;
    est.run_success[r] = double(hist[peak]) / double(shots);
  }
  est.chosen_run = 0;
  for (int r = 1; r < 4; ++r)
    if (est.run_success[r] > est.run_success[est.chosen_run]) est.chosen_run = r;
  est.b = est.run_peak[est.chosen_run];
  est.g = defaults.g_schedule[est.chosen_run];
  est.phi_hat = double(est.b) / double(M) + double(est.g) / (8.0 * double(M));
  est.phi_hat -= std::floor(est.phi_hat);
  if (est.phi_hat >= 1.0) est.phi_hat -= 1.0;
  est.succeeded = est.run_success[est.chosen_run] >= phasest::kSuccessFloor;
  return est;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator and analysis toolkit for iterated phase-kick search"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t seed = 42;

  auto* analyze = app.add_subcommand("analyze", "Closed-form spectral prediction for an instance");
  std::string analyze_input;
  analyze->add_option("--input", analyze_input, "Instance JSON file")->required();
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* grover_cmd = app.add_subcommand("grover", "Amplitude amplification at the canonical phases");
  long grover_n = 0;
  long grover_target = 0;
  int grover_shots = 0;
  grover_cmd->add_option("--n", grover_n, "Search-space size")->required();
  grover_cmd->add_option("--target", grover_target, "Marked index (default 0)");
  grover_cmd->add_option("--shots", grover_shots, "Also sample this many measurements");
  grover_cmd->add_option("--seed", seed, "Sampling seed (default 42)");
  grover_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* qpe = app.add_subcommand("qpe", "Grid-search phase estimation without a Fourier transform");
  int qpe_m = 0;
  double qpe_phi = 0.0;
  int qpe_shots = 0;
  qpe->add_option("--m", qpe_m, "Estimate bits; register size is 2^m")
      ->required()
      ->check(CLI::Range(2, 12));
  qpe->add_option("--phi", qpe_phi, "Eigenphase as a fraction of a full turn, in [0, 1)")
      ->required();
  qpe->add_option("--shots", qpe_shots, "Sample measurements instead of exact peaks");
  qpe->add_option("--seed", seed, "Sampling seed (default 42)");
  qpe->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run a self-check suite against exact simulation");
  std::string suite = "spectral";
  int trials = 50;
  verify->add_option("--suite", suite, "spectral, grover or qpe (default spectral)")
      ->check(CLI::IsMember({"spectral", "grover", "qpe"}));
  verify->add_option("--trials", trials, "Trial count (default 50)")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Suite seed (default 42)");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* resonance = app.add_subcommand("resonance", "Success-vs-detuning scan as CSV");
  int res_m = 0;
  double res_phi = 0.0;
  int res_points = 33;
  resonance->add_option("--m", res_m, "Estimate bits; register size is 2^m")
      ->required()
      ->check(CLI::Range(2, 12));
  resonance->add_option("--phi", res_phi, "Eigenphase in [0, 1)")->required();
  resonance->add_option("--points", res_points, "Scan points across one bin (default 33)");
  resonance->add_option("--out", out_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      const ProblemInstance inst = io::instance_from_json(read_json_file(analyze_input));
      const spectral::SpectralPrediction pred = spectral::predict(inst);
      io::Json inputs;
      inputs["instance"] = io::instance_to_json(inst);
      emit_json(io::run_report("analyze", std::move(inputs), io::prediction_to_json(pred), 0),
                out_path, out);
      return 0;
    }

    if (app.got_subcommand(grover_cmd)) {
      if (grover_n < 2) {
        err << "error: --n must be at least 2\n";
        return 2;
      }
      if (grover_n < 4 || (grover_n & (grover_n - 1)) != 0)
        err << "warning: n=" << grover_n
            << " is outside the canonical sizes (powers of two >= 4); running anyway\n";
      grover::GroverSpec spec;
      spec.n = grover_n;
      spec.target = grover_target;
      const grover::GroverResult res = grover::run_grover(spec);
      io::Json o = io::grover_result_to_json(spec, res);
      if (grover_shots > 0) {
        const grover::ShotSummary sum = grover::sample_run(spec, grover_shots, seed);
        o["shots"] = sum.shots;
        o["hits"] = sum.hits;
        o["estimated_success"] = sum.estimated_success;
      }
      io::Json inputs;
      inputs["n"] = grover_n;
      inputs["target"] = grover_target;
      inputs["shots"] = grover_shots;
      emit_json(io::run_report("grover", std::move(inputs), std::move(o), seed), out_path, out);
      return 0;
    }

    if (app.got_subcommand(qpe)) {
      if (!(qpe_phi >= 0.0 && qpe_phi < 1.0)) {
        err << "error: --phi must lie in [0, 1)\n";
        return 2;
      }
      phasest::PhaseEstimate est;
      if (qpe_shots > 0) {
        est = sampled_estimate(qpe_m, qpe_phi, qpe_shots, seed);
      } else {
        est = phasest::estimate_phase(qpe_m, qpe_phi);
      }
      io::Json o = io::estimate_to_json(est, qpe_m);
      if (qpe_shots > 0) o["shots"] = qpe_shots;
      io::Json inputs;
      inputs["m"] = qpe_m;
      inputs["phi"] = qpe_phi;
      inputs["shots"] = qpe_shots;
      emit_json(io::run_report("qpe", std::move(inputs), std::move(o), seed), out_path, out);
      return est.succeeded ? 0 : 1;
    }

    if (app.got_subcommand(verify)) {
      const SuiteOutcome outcome = run_verify_suite(suite, trials, seed);
      emit_json(outcome.report, out_path, out);
      return outcome.passed ? 0 : 1;
    }

    if (app.got_subcommand(resonance)) {
      if (!(res_phi >= 0.0 && res_phi < 1.0)) {
        err << "error: --phi must lie in [0, 1)\n";
        return 2;
      }
      if (res_points < 3) {
        err << "error: --points must be at least 3\n";
        return 2;
      }
      const long M = 1L << res_m;
      const double half = 0.5 / double(M);
      std::vector<double> shifts(res_points);
      for (int i = 0; i < res_points; ++i)
        shifts[i] = -half + (2.0 * half) * double(i) / double(res_points - 1);
      const std::vector<phasest::ResonancePoint> pts =
          phasest::resonance_scan(res_m, res_phi, shifts);
      std::string csv;
      char buf[96];
      for (const phasest::ResonancePoint& p : pts) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.shift, p.success);
        csv += buf;
      }
      emit_text(csv, out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace uqs::cli
