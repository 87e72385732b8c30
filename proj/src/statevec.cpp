#include "uqs/statevec.hpp"

#include "uqs/rng.hpp"

#include <algorithm>

namespace uqs {

std::vector<Index> sample_outcomes(const RealVector& probs, int shots, std::mt19937_64& gen) {
  if (shots < 0) throw std::invalid_argument("sample_outcomes: negative shot count");
  if (probs.size() < 1) throw std::invalid_argument("sample_outcomes: empty distribution");
  std::vector<double> cum(size_t(probs.size()));
  double acc = 0.0;
  for (Index i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0) throw std::invalid_argument("sample_outcomes: negative probability");
    acc += probs[i];
    cum[size_t(i)] = acc;
  }
  if (acc <= 0.0) throw std::invalid_argument("sample_outcomes: zero total probability");
  std::vector<Index> out;
  out.reserve(size_t(shots));
  for (int k = 0; k < shots; ++k) {
    const double u = rng::uniform01(gen) * acc;
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    out.push_back(Index(std::min<std::ptrdiff_t>(it - cum.begin(), probs.size() - 1)));
  }
  return out;
}

}  // namespace uqs
