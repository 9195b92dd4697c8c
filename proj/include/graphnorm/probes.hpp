#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace graphnorm {

/// Seeded linear-congruential generator; 64-bit integer arithmetic keeps the
/// probe streams byte-identical across platforms.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  double uniform() {  // [0, 1)
    return double(next() >> 11) * (1.0 / 9007199254740992.0);
  }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  std::complex<double> complex_box() { return {symmetric(), symmetric()}; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

/// Random small linear combination from a fixed dictionary.
template <class Vector>
Vector random_combination(std::span<const Vector> dict, int n_terms, Lcg& rng) {
  Vector out{};
  for (int i = 0; i < n_terms; ++i) {
    out = out + (rng.complex_box() * dict[rng.index(dict.size())]);
  }
  return out;
}

}  // namespace graphnorm
