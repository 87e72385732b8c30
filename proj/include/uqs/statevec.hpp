#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace uqs {

using Amplitude = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// |i> in an N-dimensional register.
inline StateVector basis_state(Index i, Index n) {
  if (n < 2) throw std::invalid_argument("basis_state: dimension must be at least 2");
  if (i < 0 || i >= n) throw std::out_of_range("basis_state: index out of range");
  StateVector v = StateVector::Zero(n);
  v[i] = Amplitude{1.0, 0.0};
  return v;
}

/// Every amplitude equal to 1/sqrt(N).
inline StateVector uniform_superposition(Index n) {
  if (n < 2) throw std::invalid_argument("uniform_superposition: dimension must be at least 2");
  return StateVector::Constant(n, Amplitude{1.0 / std::sqrt(double(n)), 0.0});
}

/// <a|b>, conjugating the left argument.
inline Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  return a.dot(b);
}

/// Kronecker product; |j>|k> lands at index j*Nb + k.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  const Index na = a.size(), nb = b.size();
  if (na < 1 || nb < 1) throw std::invalid_argument("tensor: empty operand");
  StateVector out(na * nb);
  for (Index j = 0; j < na; ++j) out.segment(j * nb, nb) = a[j] * b;
  return out;
}

/// |v_i|^2 for each basis index.
inline RealVector outcome_distribution(const StateVector& v) { return v.cwiseAbs2(); }

/// Draw `shots` basis indices from an outcome distribution.
std::vector<Index> sample_outcomes(const RealVector& probs, int shots, std::mt19937_64& gen);

}  // namespace uqs
