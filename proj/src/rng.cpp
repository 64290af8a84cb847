#include "effbayes/rng.hpp"

namespace effbayes {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t Rng::next_u64() {
    std::uint64_t z = key_ + (++counter_) * kGamma;
    return mix64(z);
}

Rational Rng::next_unit() {
    std::uint64_t u = next_u64();
    mpz_class num(0);
    // mpz from two 32-bit halves to stay portable
    num = static_cast<unsigned long>(u >> 32);
    num <<= 32;
    num += static_cast<unsigned long>(u & 0xffffffffULL);
    mpz_class den(1);
    den <<= 64;
    return Rational(num, den);
}

std::uint64_t Rng::derive_key(std::uint64_t seed, std::string_view tag, std::uint64_t replica) {
    return mix64(mix64(seed ^ fnv1a(tag)) + replica);
}

}  // namespace effbayes
