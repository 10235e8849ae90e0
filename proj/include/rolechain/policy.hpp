#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rolechain/result.hpp"
#include "rolechain/tx.hpp"

namespace rolechain {

enum class PolicyParam : uint8_t {
    mining_mode = 0,      // 0 = independent, 1 = dependent
    mgmt_tx_count_x = 1,  // management transactions required per window
    mgmt_interval_y = 2,  // window length in blocks
    max_mint_per_tx = 3,  // cap on coin created by one C-role transaction
};

constexpr uint8_t k_policy_param_count = 4;

inline bool known_param(uint8_t id) { return id < k_policy_param_count; }

inline const char* param_name(PolicyParam p) {
    switch (p) {
        case PolicyParam::mining_mode: return "mining_mode";
        case PolicyParam::mgmt_tx_count_x: return "mgmt_tx_count_x";
        case PolicyParam::mgmt_interval_y: return "mgmt_interval_y";
        case PolicyParam::max_mint_per_tx: return "max_mint_per_tx";
    }
    return "?";
}

// Until a parameter is set on-chain the most permissive reading applies.
inline uint32_t param_default(PolicyParam p) {
    switch (p) {
        case PolicyParam::mining_mode: return 0;
        case PolicyParam::mgmt_tx_count_x: return 0;
        case PolicyParam::mgmt_interval_y: return 0xffffffffu;
        case PolicyParam::max_mint_per_tx: return 0xffffffffu;
    }
    return 0;
}

struct PolicyEntry {
    uint32_t value = 0;
    bool permanent = false;
    uint32_t setter_depth = 0;
    uint64_t set_height = 0;

    bool operator==(const PolicyEntry&) const = default;
};

struct PolicyState {
    std::map<uint8_t, PolicyEntry> entries;
    // Node configuration, not on-chain state.
    uint32_t y_min = 16;
    uint32_t bootstrap_window = 20;

    bool operator==(const PolicyState&) const = default;

    bool is_set(PolicyParam p) const { return entries.contains(static_cast<uint8_t>(p)); }

    uint32_t effective(PolicyParam p) const {
        auto it = entries.find(static_cast<uint8_t>(p));
        return it == entries.end() ? param_default(p) : it->second.value;
    }

    Result<uint32_t> effective_by_id(uint8_t id) const {
        if (!known_param(id)) return Error{Errc::unknown_param, "param id " + std::to_string(id)};
        return effective(static_cast<PolicyParam>(id));
    }

    bool dependent_mining() const { return effective(PolicyParam::mining_mode) == 1; }
};

/// Applies one policy transaction's payloads. Authority of the issuer (M
/// role, lock state) is checked by the ledger; this enforces permanence, the
/// depth lattice, and the y floor.
inline Result<PolicyState> apply_policy_tx(const std::vector<PolicyPayload>& payloads,
                                           uint32_t issuer_depth, const PolicyState& state,
                                           uint64_t height) {
    PolicyState next = state;
    std::set<uint8_t> seen;
    for (const PolicyPayload& p : payloads) {
        if (!known_param(p.param_id))
            return Error{Errc::unknown_param, "param id " + std::to_string(p.param_id)};
        if (!seen.insert(p.param_id).second)
            return Error{Errc::duplicate_param,
                         std::string(param_name(static_cast<PolicyParam>(p.param_id))) +
                             " set twice in one transaction"};
        auto it = next.entries.find(p.param_id);
        if (it != next.entries.end()) {
            if (it->second.permanent)
                return Error{Errc::permanent_violation,
                             std::string(param_name(static_cast<PolicyParam>(p.param_id))) +
                                 " is permanent"};
            if (issuer_depth > it->second.setter_depth)
                return Error{Errc::authority_too_deep,
                             "issuer depth " + std::to_string(issuer_depth) + " > setter depth " +
                                 std::to_string(it->second.setter_depth)};
        }
        if (p.param_id == static_cast<uint8_t>(PolicyParam::mgmt_interval_y) && p.value < state.y_min)
            return Error{Errc::interval_below_minimum,
                         "y = " + std::to_string(p.value) + " < minimum " + std::to_string(state.y_min)};
        next.entries[p.param_id] = PolicyEntry{p.value, p.permanent, issuer_depth, height};
    }
    return next;
}

/// At heights past the bootstrap window every parameter must be explicit on
/// the chain; returns the ids that are still unset.
inline std::vector<PolicyParam> bootstrap_check(const PolicyState& state, uint64_t height) {
    std::vector<PolicyParam> missing;
    if (height < state.bootstrap_window) return missing;
    for (uint8_t id = 0; id < k_policy_param_count; ++id) {
        auto p = static_cast<PolicyParam>(id);
        if (!state.is_set(p)) missing.push_back(p);
    }
    return missing;
}

}  // namespace rolechain
