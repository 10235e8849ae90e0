#pragma once

#include <cstdint>
#include <string_view>

#include "rolechain/crypto.hpp"

namespace rolechain {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic generator used everywhere randomness is needed; identical
/// seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, n); n > 0.
    uint64_t below(uint64_t n) { return next_u64() % n; }

    // Uniform in [lo, hi] inclusive.
    uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(next_u64()) < p * 18446744073709551616.0;
    }

private:
    uint64_t state_;
};

/// Stable key derivation for simulated actors: seed + label -> Ed25519 seed.
inline KeyPair derive_keypair(uint64_t seed, std::string_view label) {
    ByteWriter w;
    w.u64le(seed);
    w.bytes(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
    return KeyPair::from_seed(sha256(w.data()));
}

}  // namespace rolechain
