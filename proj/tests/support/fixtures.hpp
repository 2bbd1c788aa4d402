#pragma once

// Shared generators for the unit and acceptance tests.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "homspace/motions.hpp"
#include "homspace/sigcore.hpp"

namespace homspace::testing {

// Every signature with the given dimension, elements drawn from {-1, 0, 1}.
inline std::vector<Signature> signatures_of_dimension(int n) {
  std::vector<Signature> out;
  int total = 1;
  for (int m = 0; m < n; ++m) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> elements;
    int rest = code;
    for (int m = 0; m < n; ++m) {
      elements.push_back(rest % 3 - 1);
      rest /= 3;
    }
    out.push_back(Signature::from_ints(elements));
  }
  return out;
}

inline std::vector<Signature> signatures_up_to(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const Signature& sig : signatures_of_dimension(n)) out.push_back(sig);
  }
  return out;
}

inline std::vector<Signature> nine_planes() { return signatures_of_dimension(2); }

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  // Angle range that keeps hyperbolic entries moderate.
  double angle(TypeValue type) {
    return type.value() == 1 ? uniform(-std::numbers::pi, std::numbers::pi) : uniform(-1.0, 1.0);
  }

  // Product of random plane rotations.
  Motion motion(const Signature& sig, int factors = 6) {
    const int n = sig.dimension();
    Motion out = Motion::identity(sig);
    for (int f = 0; f < factors; ++f) {
      const int i = integer(0, n - 1);
      const int j = integer(i + 1, n);
      const TypeValue type = sig.pair(i, j).is_infinite() ? TypeValue::parabolic() : sig.pair(i, j).finite();
      out = compose(out, rotation(i, j, angle(type), sig));
    }
    return out;
  }

  MVector vector(int size, double scale = 1.0) {
    MVector out(size);
    for (int i = 0; i < size; ++i) out(i) = uniform(-scale, scale);
    return out;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace homspace::testing
