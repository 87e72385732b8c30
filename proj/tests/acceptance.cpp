// End-to-end acceptance checks. Each check prints one [PASS]/[FAIL] line with
// its headline numbers and wall time; the binary exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "test_helpers.hpp"
#include "uqs/cli.hpp"
#include "uqs/grover.hpp"
#include "uqs/oracle.hpp"
#include "uqs/phasest.hpp"
#include "uqs/rng.hpp"

using namespace uqs;
namespace pi = std::numbers;
namespace fs = std::filesystem;

namespace {

int g_index = 0;
int g_failures = 0;

void run_check(const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  ++g_index;
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") +
              std::to_string(time_limit_s) + "s budget";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] %d/8 %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", g_index, label.c_str(),
              detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

ProblemInstance separated_instance(Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RealVector theta(n), s(n);
  for (Index i = 0; i < n; ++i) {
    const double jitter = 0.3 * (rng::uniform01(gen) - 0.5);
    theta[i] = wrap_angle(2.0 * pi::pi * (double(i) + jitter) / double(n));
    s[i] = rng::uniform(gen, 0.2, 1.0);
  }
  const Index target = Index(rng::uniform_index(gen, std::uint64_t(n)));
  theta[target] = 0.0;
  for (Index i = 0; i < n; ++i)
    if (i != target && std::abs(theta[i]) < 0.1 / double(n))
      theta[i] = (theta[i] >= 0.0 ? 1.0 : -1.0) * 0.1 / double(n);
  s /= s.norm();
  return make_instance(make_phase_spectrum(theta, target), make_start_state(s));
}

// Evolves |s> under reflection * diagonal for the given raw phases.
StateVector evolve_raw(const RealVector& phases, const StateVector& s, long steps) {
  const StateVector f = unit_phases(phases);
  StateVector v = s;
  for (long k = 0; k < steps; ++k) {
    v = f.cwiseProduct(v);
    v -= 2.0 * s.dot(v) * s;
  }
  return v;
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  q += "'";
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  if (cli_path.empty()) {
    std::fprintf(stderr, "usage: %s --cli PATH_TO_CLI_BINARY\n", argv[0]);
    return 2;
  }

  run_check("amplitude amplification success floors", 5.0, [](std::string& detail) {
    bool ok = true;
    double min_margin = 1.0;
    for (Index n : {Index(4), Index(256), Index(1024), Index(4096)}) {
      const double p = grover::run_grover({n, n / 3}).success_probability;
      const double floor = 1.0 - 10.0 / double(n);
      min_margin = std::min(min_margin, p - floor);
      ok = ok && p >= floor;
      if (n == 4) ok = ok && std::abs(p - 1.0) <= 1e-9;
    }
    detail = "N in {4,256,1024,4096}, min margin over floor " + fmt(min_margin) +
             ", N=4 exact to 1e-9";
    return ok;
  });

  run_check("closed form verified on 50 seeded in-regime instances", 30.0,
            [](std::string& detail) {
              std::mt19937_64 root(20260819ULL);
              int passed = 0;
              double worst = 0.0;
              for (int t = 0; t < 50; ++t) {
                const ProblemInstance inst = cli::random_in_regime_instance(root());
                const oracle::VerificationReport rep = oracle::verify_prediction(inst);
                if (rep.passed) ++passed;
                for (const auto& c : rep.checks)
                  worst = std::max(worst, c.error / c.tolerance);
              }
              detail = std::to_string(passed) + "/50 passed, worst error/tolerance " + fmt(worst);
              return passed == 50;
            });

  // Ensemble with comparable pole weights: near a pole carrying weight w the
  // nearest root can sit ~w/|F'| away, so a wildly unbalanced spectrum pins
  // roots so close to poles that |F| at a half-ulp-accurate root still blows
  // up. Balanced weights keep the residual check meaningful.
  run_check("exact eigenpair residuals across the ensemble", 10.0, [](std::string& detail) {
    std::vector<ProblemInstance> ensemble;
    for (Index n : {Index(4), Index(64), Index(512)})
      ensemble.push_back(grover::grover_instance({n, n / 2}));
    ensemble.push_back(separated_instance(48, 3));
    ensemble.push_back(separated_instance(128, 4));
    ensemble.push_back(separated_instance(500, 5));

    double worst_f = 0.0, worst_resid = 0.0, worst_complete = 0.0;
    for (const ProblemInstance& inst : ensemble) {
      const auto roots = oracle::secular_roots(inst);
      const Eigen::MatrixXcd U = test::dense_U(inst);
      double complete = 0.0;
      for (const auto& r : roots) {
        worst_f = std::max(worst_f, std::abs(oracle::secular_value(inst, r.lambda)));
        const StateVector v = oracle::eigenvector_from_root(inst, r.lambda);
        worst_resid =
            std::max(worst_resid, (U * v - std::polar(1.0, r.lambda) * v).norm());
        complete += r.overlap_s * r.overlap_s;
      }
      worst_complete = std::max(worst_complete, std::abs(complete - 1.0));
    }
    detail = "max |F(root)| " + fmt(worst_f) + " (<=1e-10), max eigen residual " +
             fmt(worst_resid) + " (<=1e-8), completeness defect " + fmt(worst_complete) +
             " (<=1e-8)";
    return worst_f <= 1e-10 && worst_resid <= 1e-8 && worst_complete <= 1e-8;
  });

  run_check("grid register moments at 1024 bins", 1.0, [](std::string& detail) {
    const double odd = phasest::analysis_cot_sum(10, 1);
    const auto mo = phasest::analysis_moments(10, 0.0);
    detail = "odd cot sum " + fmt(odd) + " (exactly 0), Lambda2 " + fmt(mo.lambda2) +
             " (1/12 +- 0.01), B " + fmt(mo.B) + " ([1.035,1.045])";
    return odd == 0.0 && std::abs(mo.lambda2 - 1.0 / 12.0) <= 0.01 && mo.B >= 1.035 &&
           mo.B <= 1.045;
  });

  run_check("phase estimation hit rate over 100 seeded phases", 60.0, [](std::string& detail) {
    const int m = 6;
    const long M = 1L << m;
    std::mt19937_64 gen(911ULL);
    int hits = 0;
    double worst_delta = 0.0;
    for (int t = 0; t < 100; ++t) {
      const double phi = rng::uniform01(gen);
      const phasest::PhaseEstimate est = phasest::estimate_phase(m, phi);
      double err = std::abs(est.phi_hat - phi);
      err = std::min(err, 1.0 - err);
      if (err <= 1.0 / (8.0 * double(M)) + 1e-15) ++hits;

      const phasest::BinDecomposition bd = phasest::nearest_bin(m, phi);
      double res_phi = phi - double(bd.g) / (8.0 * double(M));
      res_phi -= std::floor(res_phi);
      if (res_phi >= 1.0) res_phi -= 1.0;
      const ProblemInstance inst = phasest::analysis_spectrum(m, res_phi).first;
      worst_delta = std::max(worst_delta, std::abs(spectral::predict(inst).delta_cap));
    }
    const double ratio = double(phasest::query_count(m)) / double(M);
    detail = std::to_string(hits) + "/100 within an eighth bin (>=90), matched-run |Delta| max " +
             fmt(worst_delta) + " (<=0.21), queries/bins " + fmt(ratio) + " ([1.5,1.8])";
    return hits >= 90 && worst_delta <= 0.21 && ratio >= 1.5 && ratio <= 1.8;
  });

  run_check("detuned runs resonate only at the matching shift", 5.0, [](std::string& detail) {
    const int m = 6;
    const double M = 64.0;
    const double phi = (19.0 + 0.5) / M;
    const double matched = phasest::success_at_shift(m, phi, 0.5 / M).success;
    const double wrong = phasest::success_at_shift(m, phi, 3.0 / (2.0 * M)).success;
    detail = "matched-shift success " + fmt(matched) + " (>0.5), wrong-shift success " +
             fmt(wrong) + " (<0.1)";
    return matched > 0.5 && wrong < 0.1;
  });

  run_check("global phase on the diagonal leaves outcomes unchanged", 5.0,
            [](std::string& detail) {
              double worst = 0.0;
              const RealVector g5 = phasest::build_G(5, 0.23);
              const StateVector s5 = phasest::build_start_state(5);
              const long q5 = phasest::query_count(5);

              std::mt19937_64 gen(77ULL);
              RealVector theta(16), amps(16);
              for (Index i = 0; i < 16; ++i) {
                theta[i] = rng::uniform(gen, -pi::pi, pi::pi);
                amps[i] = rng::uniform(gen, -1.0, 1.0);
              }
              RealVector amps_n = amps / amps.norm();
              const StateVector s16 = amps_n.cast<Amplitude>();

              for (double xi : {0.1, 1.0, pi::pi}) {
                const RealVector shifted5 = (g5.array() + xi).matrix();
                const RealVector& base16 = theta;
                const RealVector shifted16 = (theta.array() + xi).matrix();
                const RealVector p_a = outcome_distribution(evolve_raw(g5, s5, q5));
                const RealVector p_b = outcome_distribution(evolve_raw(shifted5, s5, q5));
                worst = std::max(worst, (p_a - p_b).cwiseAbs().maxCoeff());
                const RealVector q_a = outcome_distribution(evolve_raw(base16, s16, 60));
                const RealVector q_b = outcome_distribution(evolve_raw(shifted16, s16, 60));
                worst = std::max(worst, (q_a - q_b).cwiseAbs().maxCoeff());
              }
              detail = "max outcome probability change " + fmt(worst) + " (<=1e-12)";
              return worst <= 1e-12;
            });

  run_check("repeated seeded runs write byte-identical reports", 30.0,
            [&cli_path](std::string& detail) {
              const fs::path dir = fs::temp_directory_path();
              const fs::path f1 = dir / "uqs_acceptance_run1.json";
              const fs::path f2 = dir / "uqs_acceptance_run2.json";
              const std::string base = shell_quote(cli_path) +
                                       " verify --suite spectral --trials 10 --seed 777 --out ";
              for (const fs::path& f : {f1, f2}) {
                const int status = std::system((base + shell_quote(f.string())).c_str());
                if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
                  detail = "verify subprocess failed";
                  return false;
                }
              }
              std::ifstream a(f1, std::ios::binary), b(f2, std::ios::binary);
              std::ostringstream sa, sb;
              sa << a.rdbuf();
              sb << b.rdbuf();
              fs::remove(f1);
              fs::remove(f2);
              const bool same = !sa.str().empty() && sa.str() == sb.str();
              detail = same ? std::to_string(sa.str().size()) + " bytes, identical"
                            : "outputs differ";
              return same;
            });

  std::printf("%s: %d/8 checks passed\n", g_failures == 0 ? "OK" : "FAILED", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
