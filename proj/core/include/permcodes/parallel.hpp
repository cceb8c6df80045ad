#pragma once

// Contiguous sharding of an index range over worker threads. Shards are
// numbered in ascending index order, so callers that merge per-shard results
// in shard order get output independent of the worker count.

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace permcodes {

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits [0, count) into at most `shards` non-empty contiguous ranges.
std::vector<IndexRange> split_range(std::uint64_t count, unsigned shards);

/// 0 means "all hardware threads".
unsigned resolve_workers(unsigned requested);

/// Calls fn(range, shard_index) for every shard of [0, count), one thread per
/// shard. The first exception thrown by any shard is rethrown.
template <typename Fn>
void run_sharded(std::uint64_t count, unsigned workers, Fn&& fn) {
  const auto ranges = split_range(count, resolve_workers(workers));
  if (ranges.size() <= 1) {
    for (std::size_t s = 0; s < ranges.size(); ++s) fn(ranges[s], s);
    return;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  {
    std::vector<std::jthread> threads;
    threads.reserve(ranges.size());
    for (std::size_t s = 0; s < ranges.size(); ++s) {
      threads.emplace_back([&, s] {
        try {
          fn(ranges[s], s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// SplitMix64 step; used to derive independent per-chunk seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed for sample chunk `chunk` of a run seeded with `seed`.
constexpr std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed ^ splitmix64(chunk + 0x5eedull));
}

/// Sampling work is cut into fixed-size chunks independent of worker count.
inline constexpr std::uint64_t kSampleChunk = 1024;

}  // namespace permcodes
