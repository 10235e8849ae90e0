#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rolechain/bytes.hpp"
#include "rolechain/crypto.hpp"
#include "rolechain/result.hpp"

namespace rolechain {

// Transaction version numbers select how every nvalue in the transaction is
// interpreted. Version 1 (legacy Bitcoin) is deliberately unassigned.
enum class TxMode : uint32_t {
    coin_transfer = 2,
    role_change = 3,
    policy_change = 4,
};

inline std::optional<TxMode> mode_from_version(uint32_t version) {
    switch (version) {
        case 2: return TxMode::coin_transfer;
        case 3: return TxMode::role_change;
        case 4: return TxMode::policy_change;
        default: return std::nullopt;
    }
}

struct RoleSet {
    bool u = false;
    bool a = false;
    bool c = false;
    bool l = false;
    bool m = false;

    bool operator==(const RoleSet&) const = default;

    bool empty() const { return !(u || a || c || l || m); }

    uint64_t bits() const {
        return (u ? 1u : 0u) | (a ? 2u : 0u) | (c ? 4u : 0u) | (l ? 8u : 0u) | (m ? 16u : 0u);
    }

    static RoleSet from_bits(uint64_t bits) {
        RoleSet r;
        r.u = bits & 1;
        r.a = bits & 2;
        r.c = bits & 4;
        r.l = bits & 8;
        r.m = bits & 16;
        return r;
    }

    // Letters in the legend order used for hierarchy labels.
    std::string letters() const {
        std::string s;
        if (m) s += 'M';
        if (c) s += 'C';
        if (l) s += 'L';
        if (u) s += 'U';
        if (a) s += 'A';
        return s;
    }
};

struct RolePayload {
    RoleSet roles;
    bool locked = false;

    bool operator==(const RolePayload&) const = default;
};

struct PolicyPayload {
    uint8_t param_id = 0;
    bool permanent = false;
    uint32_t value = 0;

    bool operator==(const PolicyPayload&) const = default;
};

// nvalue bit layout for role-change outputs: roles in bits 0-4, lock in bit 5.
inline uint64_t encode_role_nvalue(const RolePayload& p) {
    return p.roles.bits() | (p.locked ? 0x20u : 0u);
}

inline Result<RolePayload> decode_role_nvalue(uint64_t nvalue) {
    if (nvalue & ~0x3fULL)
        return Error{Errc::malformed_payload, "role payload has bits above bit 5 set"};
    RolePayload p;
    p.roles = RoleSet::from_bits(nvalue & 0x1f);
    p.locked = (nvalue & 0x20) != 0;
    return p;
}

// nvalue bit layout for policy-change outputs: param id in bits 0-7,
// permanence in bit 8, value in bits 16-47.
inline uint64_t encode_policy_nvalue(const PolicyPayload& p) {
    return static_cast<uint64_t>(p.param_id) | (p.permanent ? 0x100ULL : 0ULL) |
           (static_cast<uint64_t>(p.value) << 16);
}

inline Result<PolicyPayload> decode_policy_nvalue(uint64_t nvalue) {
    constexpr uint64_t layout = 0x0000ffffffff01ffULL;  // id + permanent bit + value window
    if (nvalue & ~layout)
        return Error{Errc::malformed_payload, "policy payload has out-of-layout bits set"};
    PolicyPayload p;
    p.param_id = static_cast<uint8_t>(nvalue & 0xff);
    p.permanent = (nvalue & 0x100) != 0;
    p.value = static_cast<uint32_t>(nvalue >> 16);
    return p;
}

struct OutPoint {
    Hash256 txid{};
    uint32_t index = 0;

    auto operator<=>(const OutPoint&) const = default;

    static OutPoint null() {
        OutPoint o;
        o.index = 0xffffffff;
        return o;
    }

    bool is_null() const {
        if (index != 0xffffffff) return false;
        for (uint8_t b : txid)
            if (b != 0) return false;
        return true;
    }

    std::string to_string() const { return hex_encode(txid).substr(0, 12) + ":" + std::to_string(index); }
};

struct TxInput {
    OutPoint prevout;
    Signature signature{};
    AccountKey signer;
    // Set when the signer is not the owner of prevout and claims role-based
    // authority over it (law-enforcement fund moves, spending a target's
    // live role output in a role change).
    bool law_override = false;

    bool operator==(const TxInput&) const = default;
};

struct TxOutput {
    uint64_t nvalue = 0;
    AccountKey recipient;

    bool operator==(const TxOutput&) const = default;
};

struct Transaction {
    uint32_t version = 2;
    std::vector<TxInput> inputs;
    std::vector<TxOutput> outputs;
    uint32_t locktime = 0;  // carried for layout fidelity; coinbase sets it to the block height

    bool operator==(const Transaction&) const = default;

    std::optional<TxMode> mode() const { return mode_from_version(version); }

    bool is_coinbase() const {
        return inputs.size() == 1 && inputs[0].prevout.is_null();
    }
};

namespace detail {

constexpr size_t k_input_wire_size = 36 + 1 + 32 + 64;
constexpr size_t k_output_wire_size = 8 + 32;
constexpr uint64_t k_max_entries = 1'000'000;

inline void write_tx(ByteWriter& w, const Transaction& tx, bool zero_signatures) {
    static constexpr Signature zero_sig{};
    w.u32le(tx.version);
    w.varint(tx.inputs.size());
    for (const TxInput& in : tx.inputs) {
        w.bytes(in.prevout.txid);
        w.u32le(in.prevout.index);
        w.u8(in.law_override ? 1 : 0);
        w.bytes(in.signer.pk);
        w.bytes(zero_signatures ? zero_sig : in.signature);
    }
    w.varint(tx.outputs.size());
    for (const TxOutput& out : tx.outputs) {
        w.u64le(out.nvalue);
        w.bytes(out.recipient.pk);
    }
    w.u32le(tx.locktime);
}

}  // namespace detail

inline std::vector<uint8_t> serialize_tx(const Transaction& tx) {
    ByteWriter w;
    detail::write_tx(w, tx, /*zero_signatures=*/false);
    return w.take();
}

/// Parses one transaction from the reader; the caller decides whether
/// trailing bytes are an error.
inline Result<Transaction> read_tx(ByteReader& r) {
    Transaction tx;
    auto version = r.u32le();
    if (!version) return version.error();
    tx.version = version.value();
    if (!mode_from_version(tx.version))
        return Error{Errc::unknown_version, "transaction version " + std::to_string(tx.version)};

    auto n_inputs = r.varint();
    if (!n_inputs) return n_inputs.error();
    if (n_inputs.value() > detail::k_max_entries ||
        n_inputs.value() > r.remaining() / detail::k_input_wire_size)
        return Error{Errc::count_overflow, "input count " + std::to_string(n_inputs.value())};
    tx.inputs.reserve(n_inputs.value());
    for (uint64_t i = 0; i < n_inputs.value(); ++i) {
        TxInput in;
        auto txid = r.bytes<32>();
        if (!txid) return txid.error();
        in.prevout.txid = txid.value();
        auto index = r.u32le();
        if (!index) return index.error();
        in.prevout.index = index.value();
        auto flag = r.u8();
        if (!flag) return flag.error();
        if (flag.value() > 1)
            return Error{Errc::malformed_transaction, "law_override byte must be 0 or 1"};
        in.law_override = flag.value() == 1;
        auto signer = r.bytes<32>();
        if (!signer) return signer.error();
        in.signer.pk = signer.value();
        auto sig = r.bytes<64>();
        if (!sig) return sig.error();
        in.signature = sig.value();
        tx.inputs.push_back(in);
    }

    auto n_outputs = r.varint();
    if (!n_outputs) return n_outputs.error();
    if (n_outputs.value() > detail::k_max_entries ||
        n_outputs.value() > r.remaining() / detail::k_output_wire_size)
        return Error{Errc::count_overflow, "output count " + std::to_string(n_outputs.value())};
    if (n_outputs.value() == 0)
        return Error{Errc::malformed_transaction, "transaction must have at least one output"};
    tx.outputs.reserve(n_outputs.value());
    for (uint64_t i = 0; i < n_outputs.value(); ++i) {
        TxOutput out;
        auto nvalue = r.u64le();
        if (!nvalue) return nvalue.error();
        out.nvalue = nvalue.value();
        auto recipient = r.bytes<32>();
        if (!recipient) return recipient.error();
        out.recipient.pk = recipient.value();
        tx.outputs.push_back(out);
    }

    auto locktime = r.u32le();
    if (!locktime) return locktime.error();
    tx.locktime = locktime.value();
    return tx;
}

inline Result<Transaction> deserialize_tx(std::span<const uint8_t> bytes) {
    ByteReader r(bytes);
    auto tx = read_tx(r);
    if (!tx) return tx;
    if (!r.done()) return Error{Errc::malformed_transaction, "trailing bytes after transaction"};
    return tx;
}

/// Digest over the serialization with all signature fields zeroed, so every
/// signature commits to the entire transaction body.
inline Hash256 tx_digest(const Transaction& tx) {
    ByteWriter w;
    detail::write_tx(w, tx, /*zero_signatures=*/true);
    return sha256d(w.data());
}

inline Hash256 txid(const Transaction& tx) { return tx_digest(tx); }

inline void sign_input(Transaction& tx, size_t input_index, const KeyPair& kp) {
    TxInput& in = tx.inputs.at(input_index);
    in.signer = kp.account;  // the signer field is covered by the digest
    in.signature = sign_digest(kp, tx_digest(tx));
}

inline bool verify_input(const Transaction& tx, size_t input_index) {
    if (input_index >= tx.inputs.size()) return false;
    const TxInput& in = tx.inputs[input_index];
    return verify_digest(in.signer, tx_digest(tx), in.signature);
}

}  // namespace rolechain
