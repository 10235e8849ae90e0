#pragma once

#include <sodium.h>

#include <array>
#include <cstdlib>
#include <span>

#include "rolechain/bytes.hpp"

namespace rolechain {

inline void ensure_crypto_init() {
    static const bool ok = [] { return sodium_init() >= 0; }();
    if (!ok) std::abort();
}

inline Hash256 sha256(std::span<const uint8_t> data) {
    ensure_crypto_init();
    Hash256 out;
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

inline Hash256 sha256d(std::span<const uint8_t> data) {
    Hash256 first = sha256(data);
    return sha256(std::span<const uint8_t>(first.data(), first.size()));
}

/// Account identity: the 32-byte Ed25519 verification key. Ordering and
/// equality are over the key bytes; nothing else is consensus-visible.
struct AccountKey {
    std::array<uint8_t, 32> pk{};

    auto operator<=>(const AccountKey&) const = default;

    bool is_zero() const {
        for (uint8_t b : pk)
            if (b != 0) return false;
        return true;
    }

    std::string hex() const { return hex_encode(std::span<const uint8_t>(pk.data(), pk.size())); }
    std::string short_hex() const { return hex().substr(0, 8); }
};

using Signature = std::array<uint8_t, 64>;

struct KeyPair {
    AccountKey account;
    std::array<uint8_t, 64> secret{};

    static KeyPair from_seed(const std::array<uint8_t, 32>& seed) {
        ensure_crypto_init();
        KeyPair kp;
        crypto_sign_seed_keypair(kp.account.pk.data(), kp.secret.data(), seed.data());
        return kp;
    }
};

inline Signature sign_digest(const KeyPair& kp, const Hash256& digest) {
    ensure_crypto_init();
    Signature sig;
    crypto_sign_detached(sig.data(), nullptr, digest.data(), digest.size(), kp.secret.data());
    return sig;
}

inline bool verify_digest(const AccountKey& key, const Hash256& digest, const Signature& sig) {
    ensure_crypto_init();
    return crypto_sign_verify_detached(sig.data(), digest.data(), digest.size(), key.pk.data()) == 0;
}

}  // namespace rolechain
