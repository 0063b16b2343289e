#include "apg/multiplicities.hpp"

#include <stdexcept>
#include <string>

namespace apg {

Integer MultVector::sum() const {
  Integer s = 0;
  for (const auto& v : values) s += v;
  return s;
}

Integer MultVector::sum_of_squares() const {
  Integer s = 0;
  for (const auto& v : values) s += v * v;
  return s;
}

MultVector germ_multiplicities(const Configuration& config, std::size_t chain, std::size_t k) {
  const auto& c = config.chain(chain);
  if (k < 1 || k > c.length()) {
    throw std::out_of_range("prefix length " + std::to_string(k) + " outside 1.." + std::to_string(c.length()));
  }
  MultVector m;
  m.chain = chain;
  m.k = k;
  m.points.assign(c.points.begin(), c.points.begin() + static_cast<std::ptrdiff_t>(k));
  m.values.assign(k, Integer(0));
  m.values[k - 1] = 1;
  for (std::size_t l = k - 1; l-- > 0;) {
    for (std::size_t mu = l + 1; mu < k; ++mu) {
      if (config.is_proximate(m.points[mu], m.points[l])) m.values[l] += m.values[mu];
    }
  }
  return m;
}

std::vector<int> smooth_flag_multiplicities(const Configuration& config, std::size_t chain, SmoothCurve curve) {
  const auto& c = config.chain(chain);
  std::vector<int> out(c.length(), 0);
  for (std::size_t l = 0; l < c.length(); ++l) out[l] = config.flagged(c.points[l], curve) ? 1 : 0;
  return out;
}

ChainIntersections intersection_numbers(const Configuration& config, std::size_t chain, std::size_t k) {
  auto m = germ_multiplicities(config, chain, k);
  ChainIntersections out{0, 0};
  for (std::size_t l = 0; l < k; ++l) {
    if (config.flagged(m.points[l], SmoothCurve::SpecialSection)) out.a += m.values[l];
    if (config.flagged(m.points[l], SmoothCurve::Fiber)) out.b += m.values[l];
  }
  return out;
}

}  // namespace apg
