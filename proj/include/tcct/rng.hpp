// Splittable counter-style PRNG with derived per-stream sequences, plus the
// variate samplers the simulations need (normal, gamma, beta, exchangeable
// normal vectors).
#pragma once

#include <cstdint>
#include <span>

namespace tcct {

// 64-bit splitmix-style generator. Streams are identified by (seed,
// stream_id); identical identifiers give bit-identical sequences on every
// platform. A stream is single-owner: never advance one from two threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // Uniform draw on the open interval (0, 1); never returns 0 or 1.
  double uniform01();

  // Standard normal via the Marsaglia polar method (one spare cached).
  double normal();

 private:
  std::uint64_t state_;
  std::uint64_t increment_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Gamma(shape, 1) via the Marsaglia-Tsang squeeze method; shapes below 1 use
// the boost Gamma(shape + 1) * U^(1/shape). shape > 0 required.
double sample_gamma(RngStream& rng, double shape);

// Beta(alpha, beta) as Ga/(Ga + Gb). alpha, beta > 0 required.
double sample_beta(RngStream& rng, double alpha, double beta);

// Fills out with X_i = sqrt(rho)*Z0 + sqrt(1-rho)*Z_i: standard normal
// marginals, every pairwise correlation exactly rho. Always consumes
// out.size() + 1 normal draws regardless of rho.
void sample_exchangeable_normal(RngStream& rng, double rho, std::span<double> out);

}  // namespace tcct
