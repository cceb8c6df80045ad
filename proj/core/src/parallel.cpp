#include "permcodes/parallel.hpp"

#include <algorithm>

namespace permcodes {

std::vector<IndexRange> split_range(std::uint64_t count, unsigned shards) {
  std::vector<IndexRange> out;
  if (count == 0) return out;
  const std::uint64_t k = std::max<std::uint64_t>(1, std::min<std::uint64_t>(shards, count));
  const std::uint64_t base = count / k;
  const std::uint64_t extra = count % k;
  std::uint64_t at = 0;
  for (std::uint64_t s = 0; s < k; ++s) {
    const std::uint64_t len = base + (s < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace permcodes
