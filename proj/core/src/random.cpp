#include "citemetric/random.hpp"

#include <algorithm>
#include <cmath>

namespace citemetric::rng {

double normal(Xoshiro256ss& g) noexcept {
  while (true) {
    const double u = 2.0 * g.uniform() - 1.0;
    const double v = 2.0 * g.uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double lognormal(Xoshiro256ss& g, double mu, double sigma) noexcept {
  return std::exp(mu + sigma * normal(g));
}

double gamma(Xoshiro256ss& g, double shape) noexcept {
  if (shape < 1.0) {
    const double boost = std::pow(g.uniform_open(), 1.0 / shape);
    return gamma(g, shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double z, v;
    do {
      z = normal(g);
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = g.uniform_open();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double beta(Xoshiro256ss& g, double a, double b) noexcept {
  const double x = gamma(g, a);
  const double y = gamma(g, b);
  if (x + y == 0.0) return a / (a + b);  // both underflowed
  return x / (x + y);
}

std::uint64_t binomial(Xoshiro256ss& g, std::uint64_t n, double p) noexcept {
  if (n == 0 || !(p > 0.0)) return 0;
  if (!(p < 1.0)) return n;

  constexpr double kCutoff = 1e-17;
  const double odds = p / (1.0 - p);
  const auto dn = static_cast<double>(n);
  const auto mode = std::min<std::uint64_t>(
      n, static_cast<std::uint64_t>(std::floor((dn + 1.0) * p)));

  // Weights relative to the mode: w(k+1) = w(k) * (n-k)/(k+1) * odds.
  double total = 1.0;
  std::uint64_t lo = mode;
  double w_lo = 1.0;
  for (double w = 1.0; lo > 0;) {
    const auto k = static_cast<double>(lo);
    w *= k / ((dn - k + 1.0) * odds);
    if (w < kCutoff) break;
    --lo;
    w_lo = w;
    total += w;
  }
  std::uint64_t hi = mode;
  for (double w = 1.0; hi < n;) {
    const auto k = static_cast<double>(hi);
    w *= (dn - k) / (k + 1.0) * odds;
    if (w < kCutoff) break;
    ++hi;
    total += w;
  }

  const double target = g.uniform() * total;
  double acc = 0.0;
  double w = w_lo;
  for (std::uint64_t k = lo; k < hi; ++k) {
    acc += w;
    if (target < acc) return k;
    const auto dk = static_cast<double>(k);
    w *= (dn - dk) / (dk + 1.0) * odds;
  }
  return hi;
}

}  // namespace citemetric::rng
