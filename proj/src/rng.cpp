#include "simstat/rng.hpp"

#include <bit>
#include <charconv>
#include <cstdio>

#include "simstat/errors.hpp"

namespace simstat {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Odd increment with enough bit transitions to avoid weak Weyl sequences.
constexpr std::uint64_t mix_gamma(std::uint64_t z) noexcept {
  z = mix64(z) | 1ULL;
  if (std::popcount(z ^ (z >> 1)) < 24) z ^= 0xaaaaaaaaaaaaaaaaULL;
  return z;
}

constexpr std::uint64_t increment_for(std::uint64_t stream_id) noexcept {
  return stream_id == 0 ? kGoldenGamma : mix_gamma(kGoldenGamma * (stream_id + 1));
}

std::uint64_t parse_hex(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConstructionError("invalid stream state field '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      state_(mix64(seed + mix64(stream_id))),
      increment_(increment_for(stream_id)) {}

std::uint64_t RandomStream::next_u64() noexcept {
  state_ += increment_;
  return mix64(state_);
}

double RandomStream::next_uniform() noexcept {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return (static_cast<double>(next_u64() >> 11) + 0.5) * kScale;
}

std::string RandomStream::serialize() const {
  char buf[3 * 17 + 3];
  std::snprintf(buf, sizeof buf, "%llx:%llx:%llx", static_cast<unsigned long long>(seed_),
                static_cast<unsigned long long>(stream_id_), static_cast<unsigned long long>(state_));
  return buf;
}

RandomStream RandomStream::restore(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw ConstructionError("stream state must be seed:stream:state");
  const std::string_view view(text);
  return restore(parse_hex(view.substr(0, first)), parse_hex(view.substr(first + 1, second - first - 1)),
                 parse_hex(view.substr(second + 1)));
}

RandomStream RandomStream::restore(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t state) {
  RandomStream s(seed, stream_id);
  s.state_ = state;
  return s;
}

}  // namespace simstat
