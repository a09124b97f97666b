#pragma once

#include <cstdint>

#include "pwalk/eisenstein.hpp"

// Counter-based randomness: every draw is a pure function of
// (seed, stream, counter), so Monte Carlo trials can be sharded across
// threads in any order and still reproduce bit-for-bit. Stream = trial
// index, counter = step index.

namespace pwalk {

// 64-bit avalanche finalizer (splitmix64's mixing rounds).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Keyed draw: chain the three words through the finalizer. Each stage is a
// bijection of the running state, so distinct keys cannot collide trivially;
// the avalanche does the statistical work.
inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

// Uniform step for walk position `counter` of trial `stream`. The modulo
// bias over 2^64 draws is ~5e-20, far below anything the statistical
// checks could see.
inline Step step_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<Step>(counter_draw(seed, stream, counter) % 3);
}

}  // namespace pwalk
