#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace klein {

// Seeded source for every stochastic routine: mt19937_64 with hand-rolled
// uniforms and Box-Muller Gaussians.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform();
  double gaussian();
  // Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  std::complex<double> complex_gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace klein
