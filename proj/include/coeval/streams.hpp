// Copyright 2026 The coeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COEVAL__STREAMS_HPP_
#define COEVAL__STREAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace coeval
{

/// Engine behind every stochastic operation. Fixed algorithm, so a seed
/// reproduces the same stream on every platform.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a over the bytes of `text`.
constexpr std::uint64_t fnv1a64(std::string_view text)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of the private stream for (master, key): mix64(master ^ mix64(fnv1a64(key))).
/// Depends only on its arguments, never on evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view key)
{
  return mix64(master ^ mix64(fnv1a64(key)));
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
  return mix64(master ^ mix64(index ^ 0x5851f42d4c957f2dULL));
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Each index is
/// processed exactly once; callers write results into slot i.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)> & body);

}  // namespace coeval

#endif  // COEVAL__STREAMS_HPP_
