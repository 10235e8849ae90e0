#pragma once

#include <map>

#include "rolechain/tx.hpp"

namespace rolechain {

/// Cached view of an account's live (unspent) role output.
struct RoleInfo {
    RoleSet roles;
    bool locked = false;
    OutPoint live_outpoint;

    bool operator==(const RoleInfo&) const = default;
};

// Derived from the unspent Role entries in the UTXO set; one row per account
// that has ever been granted roles (rows persist with an empty role set).
using RoleIndex = std::map<AccountKey, RoleInfo>;

inline bool holds_m(const RoleIndex& index, const AccountKey& k) {
    auto it = index.find(k);
    return it != index.end() && it->second.roles.m;
}

}  // namespace rolechain
