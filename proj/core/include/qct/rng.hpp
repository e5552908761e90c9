#pragma once

#include <cstdint>
#include <initializer_list>

namespace qct {

// Counter-based deterministic randomness: every draw is a pure function
// of (seed, party, purpose, i, j), so sessions are replayable and trials
// can run on any number of workers without shared state.

enum class RngPurpose : std::uint64_t {
  SecretBit = 1,
  Mask,
  CommitTest,
  ReturnTest,
  UnambiguousMeasure,
  ParityGuess,
  NaiveBasis,
  NaiveMeasureBob,
  NaiveMeasureAlice,
  TrialSeed,
};

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_fields(std::initializer_list<std::uint64_t> fields) {
  std::uint64_t h = 0x6A09E667F3BCC908ULL;
  for (std::uint64_t f : fields) h = mix64(h ^ f);
  return h;
}

/// Uniform double in [0, 1) from 53 hash bits.
inline double unit_uniform(std::uint64_t key) {
  return static_cast<double>(key >> 11) * 0x1.0p-53;
}

struct SessionRng {
  std::uint64_t seed = 0;

  double uniform(int party, RngPurpose purpose, int i, int j) const {
    return unit_uniform(hash_fields({seed, static_cast<std::uint64_t>(party),
                                     static_cast<std::uint64_t>(purpose),
                                     static_cast<std::uint64_t>(i),
                                     static_cast<std::uint64_t>(j)}));
  }

  int bit(int party, RngPurpose purpose, int i, int j) const {
    return uniform(party, purpose, i, j) < 0.5 ? 0 : 1;
  }
};

inline std::uint64_t derive_trial_seed(std::uint64_t base_seed, long long trial) {
  return hash_fields({base_seed, static_cast<std::uint64_t>(RngPurpose::TrialSeed),
                      static_cast<std::uint64_t>(trial)});
}

}  // namespace qct
