#include "uqs/operators.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace uqs;
namespace pi = std::numbers;

TEST_SUITE("operators") {

TEST_CASE("wrap_angle lands in (-pi, pi] with exact fixed points") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(pi::pi) == pi::pi);
  CHECK(wrap_angle(-pi::pi) == pi::pi);
  CHECK(wrap_angle(2.0 * pi::pi) == 0.0);
  CHECK(wrap_angle(3.0 * pi::pi) == pi::pi);
  CHECK(wrap_angle(-0.1) == doctest::Approx(-0.1));
  CHECK(wrap_angle(7.0) == doctest::Approx(7.0 - 2.0 * pi::pi));
  for (double x : {-9.7, -3.2, -0.4, 0.3, 2.9, 5.1, 14.8}) {
    const double w = wrap_angle(x);
    CHECK(w > -pi::pi);
    CHECK(w <= pi::pi);
    CHECK(wrap_angle(x + 4.0 * pi::pi) == doctest::Approx(w).epsilon(1e-12));
  }
}

TEST_CASE("make_phase_spectrum wraps, validates and derives the gap") {
  RealVector theta(4);
  theta << 2.0 * pi::pi, 0.5, -3.0, 2.0 * pi::pi + 0.25;
  const PhaseSpectrum spec = make_phase_spectrum(theta, 0);
  CHECK(spec.theta[0] == 0.0);
  CHECK(spec.theta[3] == doctest::Approx(0.25));
  CHECK(spec.theta_min == doctest::Approx(0.25));
  CHECK(spec.target == 0);

  RealVector bad = theta;
  bad[0] = 1e-3;
  CHECK_THROWS_AS((void)make_phase_spectrum(bad, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)make_phase_spectrum(theta, 9), std::out_of_range);
  RealVector tiny(1);
  tiny << 0.0;
  CHECK_THROWS_AS((void)make_phase_spectrum(tiny, 0), std::invalid_argument);
  RealVector zeros = RealVector::Zero(3);
  CHECK_THROWS_AS((void)make_phase_spectrum(zeros, 0), std::invalid_argument);
}

TEST_CASE("make_start_state and make_instance validate amplitudes") {
  RealVector s(3);
  s << 0.6, 0.8, 0.1;
  CHECK_THROWS_AS((void)make_start_state(s), std::invalid_argument);
  s << 0.6, 0.8, 0.0;
  CHECK(make_start_state(s).s[0] == 0.6);

  RealVector theta(3);
  theta << 1.0, 0.0, -1.0;
  RealVector neg(3);
  neg << 0.6, -0.8, 0.0;
  CHECK_THROWS_AS((void)make_instance(make_phase_spectrum(theta, 1), make_start_state(neg)),
                  std::invalid_argument);
  RealVector two(2);
  two << 1.0, 0.0;
  CHECK_THROWS_AS(
      (void)make_instance(make_phase_spectrum(theta, 1), make_start_state(two)),
      std::invalid_argument);
}

TEST_CASE("apply_phases with zero angles is the identity") {
  const RealVector zeros = RealVector::Zero(6);
  const StateVector v = test::random_state(6, 11);
  CHECK((apply_phases(zeros, v) - v).norm() == 0.0);
  CHECK_THROWS_AS((void)apply_phases(zeros, test::random_state(5, 1)), std::invalid_argument);
}

TEST_CASE("streaming application matches the dense matrix") {
  const ProblemInstance inst = test::toy_instance();
  const Eigen::MatrixXcd U = test::dense_U(inst);
  const StateVector v = test::random_state(inst.n(), 3);
  CHECK((apply_U(inst, v) - U * v).norm() <= 1e-13);

  const StateVector d = apply_diagonal(inst.spectrum, v);
  for (Index i = 0; i < inst.n(); ++i)
    CHECK(d[i] == std::polar(1.0, inst.spectrum.theta[i]) * v[i]);

  StateVector w = apply_reflection(inst.start, v);
  CHECK((apply_reflection(inst.start, w) - v).norm() <= 1e-14);
}

TEST_CASE("iterate_U equals repeated dense multiplication and stays unit") {
  const ProblemInstance inst = test::toy_instance(0.15);
  const Eigen::MatrixXcd U = test::dense_U(inst);
  StateVector ref = inst.start.s.cast<Amplitude>();
  for (int q = 0; q < 9; ++q) ref = U * ref;
  CHECK((iterate_U(inst, 9) - ref).norm() <= 1e-12);
  CHECK(iterate_U(inst, 50).norm() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS((void)iterate_U(inst, -1), std::invalid_argument);
}

TEST_CASE("amplitude curve matches pointwise amplitudes") {
  const ProblemInstance inst = test::toy_instance();
  const StateVector curve = target_amplitude_curve(inst, 12);
  REQUIRE(curve.size() == 13);
  for (long q : {0L, 1L, 7L, 12L})
    CHECK(std::abs(curve[q] - amplitude_on_target(inst, q)) <= 1e-13);
}

TEST_CASE("one canonical step triples and trims the target amplitude") {
  RealVector theta = RealVector::Constant(4, pi::pi);
  theta[2] = 0.0;
  const ProblemInstance inst = make_instance(make_phase_spectrum(theta, 2),
                                             make_start_state(RealVector::Constant(4, 0.5)));
  // s_t(3 - 4 s_t^2) with s_t = 1/2 reaches the target exactly.
  const StateVector v = iterate_U(inst, 1);
  CHECK(std::abs(v[2] - Amplitude(1.0, 0.0)) <= 1e-14);
  CHECK((v - basis_state(2, 4)).norm() <= 1e-14);
}

}  // TEST_SUITE
