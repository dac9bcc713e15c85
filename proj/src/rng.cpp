// PRNG and variate sampler implementations.
#include "tcct/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tcct {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Stafford/MurmurHash3 64-bit finalizer mix.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) {
  state_ = mix64(seed ^ mix64(stream_id));
  // Distinct odd increment per stream keeps sequences decorrelated.
  increment_ = mix64(stream_id ^ kGoldenGamma) | 1ULL;
}

std::uint64_t RngStream::next_u64() {
  state_ += increment_;
  return mix64(state_);
}

double RngStream::uniform01() {
  // ((u >> 12) + 0.5) * 2^-52 lies in [2^-53, 1 - 2^-53] exactly; the wider
  // 53-bit variant can round up to 1.0 at the top value.
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

double sample_gamma(RngStream& rng, double shape) {
  if (!(shape > 0.0)) throw std::domain_error("sample_gamma requires shape > 0");
  if (shape < 1.0) {
    const double g = sample_gamma(rng, shape + 1.0);
    return g * std::pow(rng.uniform01(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(RngStream& rng, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("sample_beta requires positive shapes");
  }
  for (;;) {
    const double ga = sample_gamma(rng, alpha);
    const double gb = sample_gamma(rng, beta);
    const double s = ga + gb;
    if (s > 0.0) return ga / s;
    // Both draws underflowed to zero; redraw.
  }
}

void sample_exchangeable_normal(RngStream& rng, double rho, std::span<double> out) {
  if (std::isnan(rho) || rho < 0.0 || rho > 1.0) {
    throw std::domain_error("sample_exchangeable_normal requires rho in [0,1]");
  }
  const double shared = std::sqrt(rho);
  const double own = std::sqrt(1.0 - rho);
  const double z0 = rng.normal();
  for (double& x : out) x = shared * z0 + own * rng.normal();
}

}  // namespace tcct
