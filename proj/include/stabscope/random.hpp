#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace stabscope {

std::uint64_t splitmix64(std::uint64_t& state);

// Stateless mixing of a master seed with a path of indices (model, n, instance...).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

// xoshiro256** seeded through splitmix64; Gaussians by Box–Muller. Every draw
// is defined bit-for-bit by the algorithm, independent of the standard library.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on {0, ..., bound - 1}; unbiased by rejection.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t bits(int count);
  double normal();

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace stabscope
