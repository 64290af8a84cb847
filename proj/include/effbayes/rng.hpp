#pragma once

#include <cstdint>
#include <string_view>

#include "effbayes/rational.hpp"

namespace effbayes {

/// SplitMix64 used as a counter-based generator: output i is a fixed mix of
/// key + i*GAMMA, so replicas with distinct keys use disjoint streams and a
/// stream can be replayed from (key, counter) alone.
class Rng {
  public:
    explicit Rng(std::uint64_t key) : key_(key), counter_(0) {}

    std::uint64_t next_u64();

    /// Uniform dyadic rational k/2^64 in [0,1).
    Rational next_unit();

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

    /// Substream splitting rule: key' = mix(mix(seed ^ fnv1a(tag)) + replica).
    /// Documented so runs are reproducible across platforms.
    static std::uint64_t derive_key(std::uint64_t seed, std::string_view tag, std::uint64_t replica);

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace effbayes
