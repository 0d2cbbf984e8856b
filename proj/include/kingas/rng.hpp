#ifndef KINGAS_RNG_HPP
#define KINGAS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace kingas {

/// xoshiro256** with splitmix64 seeding. Self-contained so that particle
/// streams are bit-reproducible across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  /// Stream seed for an independent sub-stream (replica) of a master seed.
  static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double u01_open() { return 1.0 - u01(); }

  /// Standard normal via Box-Muller (cached spare).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(u01_open()));
    const double a = 6.28318530717958647692 * u01();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Poisson variate (Knuth in chunks, adequate for the means used here).
  std::uint64_t poisson(double mean) {
    std::uint64_t total = 0;
    while (mean > 500.0) {
      total += knuth(500.0);
      mean -= 500.0;
    }
    return total + knuth(mean);
  }

  // Serializable state (4 words + Box-Muller cache).
  struct State {
    std::uint64_t s[4];
    double spare;
    std::uint8_t have_spare;
  };
  State state() const {
    return {{s_[0], s_[1], s_[2], s_[3]}, spare_,
            static_cast<std::uint8_t>(have_spare_ ? 1 : 0)};
  }
  void restore(const State& st) {
    for (int i = 0; i < 4; ++i) s_[i] = st.s[i];
    spare_ = st.spare;
    have_spare_ = st.have_spare != 0;
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t knuth(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    double prod = 1.0;
    std::uint64_t n = 0;
    do {
      prod *= u01_open();
      ++n;
    } while (prod > limit);
    return n - 1;
  }

  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace kingas

#endif
