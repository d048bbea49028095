#pragma once

#include <cstdint>
#include <random>

namespace wqf {

// Identifies an independent random stream. The same (seed, stream_id) pair
// reproduces the same draw sequence bit for bit.
struct RngSeed {
  std::uint64_t seed = 42;
  std::uint64_t stream_id = 0;
};

// Seeded random source. Streams with the same seed but different stream_id
// are decorrelated, so parallel tasks can each own one stream and a serial
// replay with the same stream assignment reproduces their results exactly.
class Rng {
 public:
  explicit Rng(RngSeed s) {
    std::seed_seq seq{static_cast<std::uint32_t>(s.seed),
                      static_cast<std::uint32_t>(s.seed >> 32),
                      static_cast<std::uint32_t>(s.stream_id),
                      static_cast<std::uint32_t>(s.stream_id >> 32)};
    engine_.seed(seq);
  }

  Rng(std::uint64_t seed, std::uint64_t stream_id) : Rng(RngSeed{seed, stream_id}) {}

  // Standard normal draw.
  double normal() { return normal_(engine_); }

  // Uniform draw on [0, 1).
  double uniform() { return uniform_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace wqf
