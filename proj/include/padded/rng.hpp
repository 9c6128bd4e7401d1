// rng.hpp - deterministic seeded randomness and truncated exponentials.
//
// Draws must replay bit-identically across runs and thread counts, so the
// generator is a fixed SplitMix64 walk and substreams are derived by hashing
// (parent stream, label) rather than by sharing mutable state.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace padded {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2)));
}

inline std::uint64_t hash_label(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace detail

/// Forkable random stream. `fork` derives an independent child stream from
/// the parent's identity and a label; it never advances the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : stream_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return detail::mix64(state_);
  }

  /// Uniform draw in [0, 1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    return next_u64() % bound;
  }

  Rng fork(std::string_view label, std::uint64_t a = 0, std::uint64_t b = 0,
           std::uint64_t c = 0) const {
    std::uint64_t h = detail::hash_combine(stream_, detail::hash_label(label));
    h = detail::hash_combine(h, a);
    h = detail::hash_combine(h, b);
    h = detail::hash_combine(h, c);
    return Rng(h);
  }

  /// Stream identity (the seed this stream was created with).
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t stream_;
  std::uint64_t state_;
};

/// Exponential with rate lambda truncated to [theta1, theta2].
struct TexpParams {
  double lambda = 1.0;
  double theta1 = 0.0;
  double theta2 = 1.0;
};

inline void texp_validate(const TexpParams& p) {
  if (!(p.lambda > 0) || !std::isfinite(p.lambda))
    throw std::invalid_argument("texp: lambda must be positive and finite");
  if (!(p.theta1 < p.theta2) || !std::isfinite(p.theta1) || !std::isfinite(p.theta2))
    throw std::invalid_argument("texp: need theta1 < theta2, both finite");
}

/// Density lambda*e^(-lambda*y) / (e^(-lambda*theta1) - e^(-lambda*theta2))
/// on [theta1, theta2], zero outside.
inline double texp_density(const TexpParams& p, double y) {
  texp_validate(p);
  if (y < p.theta1 || y > p.theta2) return 0.0;
  double norm = std::exp(-p.lambda * p.theta1) - std::exp(-p.lambda * p.theta2);
  return p.lambda * std::exp(-p.lambda * y) / norm;
}

inline double texp_cdf(const TexpParams& p, double y) {
  texp_validate(p);
  if (y <= p.theta1) return 0.0;
  if (y >= p.theta2) return 1.0;
  double a = std::exp(-p.lambda * p.theta1);
  double b = std::exp(-p.lambda * p.theta2);
  return (a - std::exp(-p.lambda * y)) / (a - b);
}

/// Inverse-CDF map from a unit uniform u; u = 0 gives theta1 and u -> 1
/// approaches theta2. Result is clamped into [theta1, theta2].
inline double texp_sample_from_u(const TexpParams& p, double u) {
  texp_validate(p);
  if (!(u >= 0.0) || u >= 1.0) throw std::invalid_argument("texp: u must lie in [0,1)");
  double a = std::exp(-p.lambda * p.theta1);
  double b = std::exp(-p.lambda * p.theta2);
  double y = -std::log(a - u * (a - b)) / p.lambda;
  if (y < p.theta1) y = p.theta1;
  if (y > p.theta2) y = p.theta2;
  return y;
}

inline double texp_sample(const TexpParams& p, Rng& rng) {
  return texp_sample_from_u(p, rng.next_double());
}

}  // namespace padded
