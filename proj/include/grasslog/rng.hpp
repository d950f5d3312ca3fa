#pragma once

#include <cstdint>

#include "grasslog/configuration.hpp"
#include "grasslog/rational.hpp"

namespace grasslog {

/// splitmix64; deterministic across platforms, used for every seeded draw.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [-1, 1).
    double sym() { return 2.0 * uniform() - 1.0; }
    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Cd complex_box() { return {sym(), sym()}; }

    /// Small nonzero-denominator rational, numerator in [-9,9], denominator in [1,4].
    Rational small_rational() { return Rational(range(-9, 9), range(1, 4)); }
    GaussianRational small_gaussian() { return {small_rational(), small_rational()}; }

  private:
    std::uint64_t state_;
};

/// Random generic configuration over the exact backend (re-draws until the
/// genericity predicate holds).
ConfigurationQ random_exact_configuration(Rng& rng, int dim, int count, bool real_only = false);

/// Random generic float configuration with entries in the unit box.
ConfigurationF random_float_configuration(Rng& rng, int dim, int count);

/// Random float configuration whose maximal minors satisfy
/// max|Delta| / min|Delta| <= ratio_bound (conditioning guard).
ConfigurationF conditioned_float_configuration(Rng& rng, int dim, int count, double ratio_bound);

} // namespace grasslog
