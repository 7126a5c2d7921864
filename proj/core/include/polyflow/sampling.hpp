#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace polyflow {

enum class Scheme { grid, monte_carlo, low_discrepancy };
std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Deterministic sampling plan over [0,R_1] x ... x [0,R_d]. The stream is
/// counter-based from the seed, so parallel evaluation stays reproducible.
struct SamplingPlan {
  int d = 1;
  std::vector<double> R;
  Scheme scheme = Scheme::monte_carlo;
  long samples = 200000;
  std::vector<long> per_axis;  // grid counts; derived from samples when empty
  std::uint64_t seed = 0;

  long total_samples() const;
  // i-th sample point; i in [0, total_samples()).
  std::vector<double> point(long i) const;
};

struct AverageEstimate {
  std::complex<double> value{0.0, 0.0};
  double stderr_est = 0.0;  // monte-carlo only; 0 otherwise
  long samples = 0;
  Scheme scheme = Scheme::monte_carlo;
  std::uint64_t seed = 0;
  std::vector<double> R;
};

// Counter-based uniform variate in [0,1); splitmix64-style avalanche over
// (seed, index, axis).
double counter_u01(std::uint64_t seed, std::uint64_t index, std::uint64_t axis);

// Halton radical inverse in the given base (1-indexed sequence).
double halton(std::uint64_t index, int base);

}  // namespace polyflow
