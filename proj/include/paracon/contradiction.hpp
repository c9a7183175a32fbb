#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "paracon/kb_model.hpp"
#include "paracon/similarity.hpp"

namespace paracon {

// Literals of k whose complement is also in k.
LiteralSet extract_contradictions(const Entity& k);

// Atoms occurring in k with both polarities.
AtomSet contradictory_atoms(const Entity& k);

struct RepairOptions {
    // Apply the literal E(K) != K criterion to the empty entity as well,
    // which makes {} irreparable. Off by default: {} is consistent.
    bool strict = false;
    // Upper bound on plans returned by RepairPolicy::Enumerate.
    std::size_t enumerate_limit = 1024;
};

bool is_repairable(const Entity& k, const RepairOptions& options = {});

enum class RepairPolicy { DropNegative, DropPositive, Enumerate };

struct RepairPlan {
    std::string entity_id;
    LiteralSet removals;
    RepairPolicy policy = RepairPolicy::DropNegative;

    friend bool operator==(const RepairPlan&, const RepairPlan&) = default;
};

struct RepairReport {
    LiteralSet extracted;
    AtomSet contradictory_atoms;
    std::size_t minimal_size = 0;
    std::vector<RepairPlan> plans;
    bool repairable = false;
    // Enumerate only: the 2^c plans did not fit under enumerate_limit.
    bool truncated = false;
};

// One removal per internal complementary pair. DropNegative/DropPositive
// yield a single plan; Enumerate yields every minimal plan in choice order
// (first atom most significant, negative-drop before positive-drop).
RepairReport minimal_repairs(const Entity& k, RepairPolicy policy, const RepairOptions& options = {});

// k minus plan.removals. Throws PreconditionError on an id mismatch or when
// a removal is not in k.
Entity apply_repair(const Entity& k, const RepairPlan& plan);

// s_star after repairing each entity on its own with the first plan of
// `policy`. Throws IrreparableEntityError naming the offending entity.
SimilarityBreakdown xi_rp(const Entity& k1, const Entity& k2, RepairPolicy policy = RepairPolicy::DropNegative,
                          const RepairOptions& options = {});

}  // namespace paracon
