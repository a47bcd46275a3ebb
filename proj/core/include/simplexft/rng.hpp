#ifndef SIMPLEXFT_RNG_HPP
#define SIMPLEXFT_RNG_HPP

#include <cstdint>
#include <random>

namespace simplexft {

/// Seeded sampler used by every verification sweep.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// Reals use the top 53 bits, integers use a modulo reduction, so draws are
/// identical on every platform (std distributions are not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace simplexft

#endif // SIMPLEXFT_RNG_HPP
