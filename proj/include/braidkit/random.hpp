#pragma once

#include "braidkit/core.hpp"

#include <cstdint>
#include <random>

namespace braidkit {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent per-shard seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// k letters drawn i.i.d. uniformly from the 2(n-1) signed generators.
BraidWord random_braid(int k, int strands, Rng& rng);

/// k positions drawn i.i.d. uniformly from 1..n-1.
FlatWord random_flat(int k, int strands, Rng& rng);

}  // namespace braidkit
