// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace skycov {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer, used to decorrelate seeds of derived streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for item `index` of a run seeded with `seed`. Streams
/// depend only on (seed, stream_tag, index), never on scheduling order.
inline Rng substream(std::uint64_t seed, std::uint64_t stream_tag, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed ^ splitmix64(stream_tag)) + index));
}

}  // namespace skycov
