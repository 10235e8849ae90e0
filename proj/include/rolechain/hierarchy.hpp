#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rolechain/result.hpp"
#include "rolechain/role_index.hpp"
#include "rolechain/tx.hpp"

namespace rolechain {

using ScopeSet = std::set<AccountKey>;

/// Parent-edge forest over accounts. Accounts absent from the map have never
/// held roles and are invisible to every scope computation.
struct HierarchyTree {
    std::map<AccountKey, std::optional<AccountKey>> parent;
    AccountKey root;

    bool operator==(const HierarchyTree&) const = default;

    bool registered(const AccountKey& k) const { return parent.contains(k); }

    std::optional<AccountKey> parent_of(const AccountKey& k) const {
        auto it = parent.find(k);
        return it == parent.end() ? std::nullopt : it->second;
    }

    bool is_ancestor_or_self(const AccountKey& candidate, const AccountKey& node) const {
        std::optional<AccountKey> cur = node;
        while (cur) {
            if (*cur == candidate) return true;
            cur = parent_of(*cur);
        }
        return false;
    }

    uint32_t depth(const AccountKey& k) const {
        uint32_t d = 0;
        std::optional<AccountKey> cur = parent_of(k);
        while (cur) {
            ++d;
            cur = parent_of(*cur);
        }
        return d;
    }

    std::map<AccountKey, std::vector<AccountKey>> children() const {
        std::map<AccountKey, std::vector<AccountKey>> out;
        for (const auto& [node, par] : parent)
            if (par) out[*par].push_back(node);
        return out;
    }

    static HierarchyTree with_root(const AccountKey& root_key) {
        HierarchyTree t;
        t.root = root_key;
        t.parent[root_key] = std::nullopt;
        return t;
    }
};

/// Folds one role transition into the tree. Granting roles to a roleless
/// account rewires (or creates) its parent edge; removals leave edges intact
/// so the account keeps its place until re-granted.
inline Result<HierarchyTree> on_role_transition(const HierarchyTree& tree, const AccountKey& issuer,
                                                const AccountKey& target, const RoleSet& old_roles,
                                                const RoleSet& new_roles) {
    if (!old_roles.empty() || new_roles.empty()) return tree;
    if (tree.registered(target) && tree.is_ancestor_or_self(target, issuer))
        return Error{Errc::cycle_created, "target is an ancestor of the issuer"};
    HierarchyTree next = tree;
    next.parent[target] = issuer;
    return next;
}

/// Breadth-first search over child edges from node, node included.
inline Result<ScopeSet> manager_scope(const HierarchyTree& tree, const AccountKey& node) {
    if (!tree.registered(node)) return Error{Errc::unknown_node, "account not in hierarchy"};
    auto kids = tree.children();
    ScopeSet scope;
    std::deque<AccountKey> frontier{node};
    while (!frontier.empty()) {
        AccountKey cur = frontier.front();
        frontier.pop_front();
        if (!scope.insert(cur).second) continue;
        auto it = kids.find(cur);
        if (it != kids.end())
            for (const AccountKey& child : it->second) frontier.push_back(child);
    }
    return scope;
}

/// Walks the parent chain (node first) to the nearest account holding M and
/// returns that account's manager scope.
inline Result<ScopeSet> law_scope(const HierarchyTree& tree, const RoleIndex& index,
                                  const AccountKey& node) {
    if (!tree.registered(node)) return Error{Errc::unknown_node, "account not in hierarchy"};
    std::optional<AccountKey> cur = node;
    while (cur) {
        if (holds_m(index, *cur)) return manager_scope(tree, *cur);
        cur = tree.parent_of(*cur);
    }
    return Error{Errc::no_manager_ancestor, "no account with M on the path to the root"};
}

using NameMap = std::map<AccountKey, std::string>;

inline std::string display_name(const NameMap& names, const AccountKey& k) {
    auto it = names.find(k);
    return it == names.end() ? k.short_hex() : it->second;
}

/// Graphviz export of the forest. Nodes are labeled "Name (roles, state)"
/// with D marking a locked account; output ordering is sorted by account key
/// so identical states serialize identically.
inline std::string export_dot(const HierarchyTree& tree, const RoleIndex& index,
                              const NameMap& names = {}) {
    std::ostringstream out;
    out << "digraph hierarchy {\n";
    for (const auto& [node, par] : tree.parent) {
        std::string label = display_name(names, node);
        label += " (";
        std::string letters;
        bool locked = false;
        if (auto it = index.find(node); it != index.end()) {
            letters = it->second.roles.letters();
            locked = it->second.locked;
        }
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) label += ", ";
            label += letters[i];
        }
        if (locked) {
            if (!letters.empty()) label += ", ";
            label += "D";
        }
        label += ")";
        out << "  \"" << display_name(names, node) << "\" [label=\"" << label << "\"];\n";
    }
    for (const auto& [node, par] : tree.parent) {
        if (!par) continue;
        out << "  \"" << display_name(names, *par) << "\" -> \"" << display_name(names, node)
            << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace rolechain
