#include "polyflow/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace polyflow {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::grid: return "grid";
    case Scheme::monte_carlo: return "monte-carlo";
    case Scheme::low_discrepancy: return "low-discrepancy";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "grid") return Scheme::grid;
  if (name == "monte-carlo" || name == "mc") return Scheme::monte_carlo;
  if (name == "low-discrepancy" || name == "lowdisc" || name == "qmc")
    return Scheme::low_discrepancy;
  throw std::invalid_argument("unknown sampling scheme '" + name + "'");
}

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

double counter_u01(std::uint64_t seed, std::uint64_t index, std::uint64_t axis) {
  std::uint64_t h = splitmix(splitmix(seed ^ 0xD1B54A32D192ED03ULL) ^ index);
  h = splitmix(h ^ (axis * 0x9E3779B97F4A7C15ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

long SamplingPlan::total_samples() const {
  if (scheme != Scheme::grid) return samples;
  long total = 1;
  for (int i = 0; i < d; ++i) {
    long n = per_axis.empty()
                 ? std::max(1L, static_cast<long>(std::llround(
                                std::pow(static_cast<double>(samples), 1.0 / d))))
                 : per_axis[i];
    total *= n;
  }
  return total;
}

std::vector<double> SamplingPlan::point(long i) const {
  std::vector<double> s(d);
  switch (scheme) {
    case Scheme::grid: {
      std::vector<long> counts(d);
      for (int a = 0; a < d; ++a)
        counts[a] = per_axis.empty()
                        ? std::max(1L, static_cast<long>(std::llround(std::pow(
                                       static_cast<double>(samples), 1.0 / d))))
                        : per_axis[a];
      long rem = i;
      for (int a = d - 1; a >= 0; --a) {
        long idx = rem % counts[a];
        rem /= counts[a];
        s[a] = (static_cast<double>(idx) + 0.5) / static_cast<double>(counts[a]) * R[a];
      }
      break;
    }
    case Scheme::monte_carlo: {
      for (int a = 0; a < d; ++a)
        s[a] = counter_u01(seed, static_cast<std::uint64_t>(i), a) * R[a];
      break;
    }
    case Scheme::low_discrepancy: {
      // Cranley-Patterson rotation makes the stream seed-dependent.
      for (int a = 0; a < d; ++a) {
        double u = halton(static_cast<std::uint64_t>(i) + 1,
                          kPrimes[a % (sizeof(kPrimes) / sizeof(int))]);
        double rot = counter_u01(seed, 0, a);
        double v = u + rot;
        if (v >= 1.0) v -= 1.0;
        s[a] = v * R[a];
      }
      break;
    }
  }
  return s;
}

}  // namespace polyflow
