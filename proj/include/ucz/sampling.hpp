#pragma once

#include <ucz/rational.hpp>

#include <cstdint>
#include <random>

namespace ucz {

/// Seeded sampler for property sweeps.
///
/// The raw stream is std::mt19937_64 (the 64-bit Mersenne Twister, whose
/// output sequence is fixed by the C++ standard). Integers in [lo, hi] are
/// drawn by rejection on the raw 64-bit word, so every draw is reproducible
/// across standard libraries; std::uniform_int_distribution is not.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  bool coin() { return uniform_int(0, 1) == 1; }

  /// p/q with |p| ≤ max_num and 1 ≤ q ≤ max_den.
  Rat rational(int max_num = 5, int max_den = 3) {
    const auto p = uniform_int(-max_num, max_num);
    const auto q = uniform_int(1, max_den);
    return Rat(p) / Rat(q);
  }

  Rat nonzero_rational(int max_num = 5, int max_den = 3) {
    Rat r;
    do {
      r = rational(max_num, max_den);
    } while (r == 0);
    return r;
  }

  Vec vector(Eigen::Index n, int max_num = 5, int max_den = 3) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rational(max_num, max_den);
    return v;
  }

  Mat matrix(Eigen::Index rows, Eigen::Index cols, int max_num = 5, int max_den = 3) {
    Mat m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rational(max_num, max_den);
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ucz
