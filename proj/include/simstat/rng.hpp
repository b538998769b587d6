#pragma once

#include <cstdint>
#include <string>

namespace simstat {

/// Seedable 64-bit splittable-mix generator.
///
/// Each stream walks a Weyl sequence `state += increment` and hashes the state
/// through a 64-bit avalanche finalizer. The stream id selects the increment,
/// so streams sharing a seed are decorrelated without jump-ahead. Output is
/// bit-exact across platforms for a given (seed, streamId).
///
/// A stream is a plain value owned by its caller; copying it forks an
/// identical sequence.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Next raw 64-bit output.
  std::uint64_t next_u64() noexcept;
  /// Next variate in the open interval (0, 1): top 53 bits, offset by half an ulp.
  double next_uniform() noexcept;

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }
  [[nodiscard]] std::uint64_t state() const noexcept { return state_; }
  [[nodiscard]] std::uint64_t increment() const noexcept { return increment_; }

  /// "seed:stream:state" in hex; `restore` resumes the exact sequence.
  [[nodiscard]] std::string serialize() const;
  static RandomStream restore(const std::string& text);
  static RandomStream restore(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t state);

  friend bool operator==(const RandomStream&, const RandomStream&) = default;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
  std::uint64_t increment_;
};

/// Convenience matching the operation names used throughout the docs.
inline RandomStream new_stream(std::uint64_t seed, std::uint64_t stream_id = 0) {
  return RandomStream(seed, stream_id);
}

}  // namespace simstat
