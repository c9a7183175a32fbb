#include "paracon/contradiction.hpp"

#include "paracon/error.hpp"

namespace paracon {

LiteralSet extract_contradictions(const Entity& k) {
    LiteralSet out;
    for (const auto& lit : k.literals())
        if (k.contains(complement(lit))) out.insert(lit);
    return out;
}

AtomSet contradictory_atoms(const Entity& k) {
    AtomSet out;
    for (const auto& lit : k.literals())
        if (lit.is_positive() && k.contains(complement(lit))) out.insert(lit.atom);
    return out;
}

bool is_repairable(const Entity& k, const RepairOptions& options) {
    if (k.empty()) return !options.strict;
    return extract_contradictions(k) != k.literals();
}

namespace {

RepairPlan plan_for_choice(const Entity& k, const std::vector<Atom>& atoms, std::uint64_t choice,
                           RepairPolicy policy) {
    RepairPlan plan{k.id(), {}, policy};
    const std::size_t c = atoms.size();
    for (std::size_t i = 0; i < c; ++i) {
        const bool drop_positive = (choice >> (c - 1 - i)) & 1U;
        plan.removals.insert(Literal{atoms[i], drop_positive ? Polarity::Positive : Polarity::Negative});
    }
    return plan;
}

}  // namespace

RepairReport minimal_repairs(const Entity& k, RepairPolicy policy, const RepairOptions& options) {
    RepairReport report;
    report.extracted = extract_contradictions(k);
    report.contradictory_atoms = contradictory_atoms(k);
    report.minimal_size = report.contradictory_atoms.size();
    report.repairable = is_repairable(k, options);

    const std::vector<Atom> atoms(report.contradictory_atoms.begin(), report.contradictory_atoms.end());
    const std::size_t c = atoms.size();

    switch (policy) {
        case RepairPolicy::DropNegative:
            report.plans.push_back(plan_for_choice(k, atoms, 0, policy));
            break;
        case RepairPolicy::DropPositive: {
            RepairPlan plan{k.id(), {}, policy};
            for (const auto& a : atoms) plan.removals.insert(positive(a));
            report.plans.push_back(std::move(plan));
            break;
        }
        case RepairPolicy::Enumerate: {
            if (options.enumerate_limit == 0) {
                report.truncated = true;
                break;
            }
            // 2^c overflows past 63 pairs; the cap always binds well before.
            const bool fits = c < 64 && (std::uint64_t{1} << c) <= options.enumerate_limit;
            const std::uint64_t count = fits ? (std::uint64_t{1} << c) : options.enumerate_limit;
            report.truncated = !fits;
            report.plans.reserve(count);
            for (std::uint64_t choice = 0; choice < count; ++choice)
                report.plans.push_back(plan_for_choice(k, atoms, choice, policy));
            break;
        }
    }
    return report;
}

Entity apply_repair(const Entity& k, const RepairPlan& plan) {
    if (plan.entity_id != k.id())
        throw PreconditionError("repair plan for '" + plan.entity_id + "' applied to entity '" + k.id() + "'");
    LiteralSet kept = k.literals();
    for (const auto& lit : plan.removals) {
        if (kept.erase(lit) == 0)
            throw PreconditionError("repair removes " + lit.to_string() + " which is not in entity '" + k.id() + "'");
    }
    return Entity(k.id(), std::move(kept));
}

namespace {

Entity repaired(const Entity& k, RepairPolicy policy, const RepairOptions& options) {
    RepairOptions one = options;
    one.enumerate_limit = 1;
    auto report = minimal_repairs(k, policy, one);
    if (!report.repairable) throw IrreparableEntityError(k.id());
    return apply_repair(k, report.plans.front());
}

}  // namespace

SimilarityBreakdown xi_rp(const Entity& k1, const Entity& k2, RepairPolicy policy, const RepairOptions& options) {
    return s_star(repaired(k1, policy, options), repaired(k2, policy, options));
}

}  // namespace paracon
