#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace rolechain {

enum class Errc {
    // transaction model
    malformed_payload,
    truncated_input,
    count_overflow,
    unknown_version,
    bad_signature,
    signer_not_owner,
    malformed_transaction,
    // ledger
    missing_u_role,
    account_locked,
    unknown_utxo,
    double_spend,
    overspend,
    scope_violation,
    missing_c_role,
    mint_cap_exceeded,
    replayed_role,
    authority_exceeded,
    issuer_locked,
    missing_m_role,
    missing_l_role,
    // hierarchy
    cycle_created,
    unknown_node,
    no_manager_ancestor,
    // policy
    permanent_violation,
    authority_too_deep,
    interval_below_minimum,
    unknown_param,
    duplicate_param,
    // consensus
    bad_pow,
    bad_merkle,
    bad_coinbase,
    coinbase_overpay,
    bootstrap_incomplete,
    window_violation,
    orphan_parent,
    bad_height,
    // simulator / cli
    script_error,
    assertion_failed,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::malformed_payload: return "MalformedPayload";
        case Errc::truncated_input: return "TruncatedInput";
        case Errc::count_overflow: return "CountOverflow";
        case Errc::unknown_version: return "UnknownVersion";
        case Errc::bad_signature: return "BadSignature";
        case Errc::signer_not_owner: return "SignerNotOwner";
        case Errc::malformed_transaction: return "MalformedTransaction";
        case Errc::missing_u_role: return "MissingURole";
        case Errc::account_locked: return "AccountLocked";
        case Errc::unknown_utxo: return "UnknownUtxo";
        case Errc::double_spend: return "DoubleSpend";
        case Errc::overspend: return "Overspend";
        case Errc::scope_violation: return "ScopeViolation";
        case Errc::missing_c_role: return "MissingCRole";
        case Errc::mint_cap_exceeded: return "MintCapExceeded";
        case Errc::replayed_role: return "ReplayedRole";
        case Errc::authority_exceeded: return "AuthorityExceeded";
        case Errc::issuer_locked: return "IssuerLocked";
        case Errc::missing_m_role: return "MissingMRole";
        case Errc::missing_l_role: return "MissingLRole";
        case Errc::cycle_created: return "CycleCreated";
        case Errc::unknown_node: return "UnknownNode";
        case Errc::no_manager_ancestor: return "NoManagerAncestor";
        case Errc::permanent_violation: return "PermanentViolation";
        case Errc::authority_too_deep: return "AuthorityTooDeep";
        case Errc::interval_below_minimum: return "IntervalBelowMinimum";
        case Errc::unknown_param: return "UnknownParam";
        case Errc::duplicate_param: return "DuplicateParam";
        case Errc::bad_pow: return "BadPoW";
        case Errc::bad_merkle: return "BadMerkle";
        case Errc::bad_coinbase: return "BadCoinbase";
        case Errc::coinbase_overpay: return "CoinbaseOverpay";
        case Errc::bootstrap_incomplete: return "BootstrapIncomplete";
        case Errc::window_violation: return "WindowViolation";
        case Errc::orphan_parent: return "OrphanParent";
        case Errc::bad_height: return "BadHeight";
        case Errc::script_error: return "ScriptError";
        case Errc::assertion_failed: return "AssertionFailed";
    }
    return "UnknownError";
}

struct Error {
    Errc code;
    std::string detail;

    std::string to_string() const {
        std::string s(errc_name(code));
        if (!detail.empty()) {
            s += ": ";
            s += detail;
        }
        return s;
    }
};

inline Error make_error(Errc code, std::string detail = {}) {
    return Error{code, std::move(detail)};
}

/// Minimal expected-style result; either a value or an Error.
template <typename T>
class [[nodiscard]] Result {
public:
    Result(T value) : inner_(std::in_place_index<0>, std::move(value)) {}
    Result(Error err) : inner_(std::in_place_index<1>, std::move(err)) {}
    Result(Errc code, std::string detail = {}) : Result(Error{code, std::move(detail)}) {}

    bool ok() const { return inner_.index() == 0; }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        assert(ok());
        return std::get<0>(inner_);
    }
    T& value() & {
        assert(ok());
        return std::get<0>(inner_);
    }
    T&& take() && {
        assert(ok());
        return std::get<0>(std::move(inner_));
    }
    const Error& error() const {
        assert(!ok());
        return std::get<1>(inner_);
    }

private:
    std::variant<T, Error> inner_;
};

template <>
class [[nodiscard]] Result<void> {
public:
    Result() = default;
    Result(Error err) : err_(std::in_place, std::move(err)) {}
    Result(Errc code, std::string detail = {}) : err_(std::in_place, Error{code, std::move(detail)}) {}

    bool ok() const { return !err_.has_value(); }
    explicit operator bool() const { return ok(); }
    const Error& error() const {
        assert(!ok());
        return *err_;
    }

private:
    std::optional<Error> err_;
};

}  // namespace rolechain
