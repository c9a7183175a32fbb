#pragma once

// Random entities and knowledge bases for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "paracon/kb_model.hpp"

namespace paracon::testing {

struct EntityShape {
    std::size_t max_atoms = 8;     // atom pool a0..a{max_atoms-1}
    std::size_t max_literals = 12;
    // Fraction of atoms that carry a ground argument, exercising the
    // first-order form; kept small so collisions stay likely.
    double with_args = 0.15;
};

inline Atom pool_atom(std::size_t i, bool with_arg) {
    if (with_arg) return Atom("r" + std::to_string(i), {"c" + std::to_string(i % 2)});
    return Atom("a" + std::to_string(i));
}

inline Literal random_literal(std::mt19937_64& rng, const EntityShape& shape) {
    std::uniform_int_distribution<std::size_t> atom(0, shape.max_atoms - 1);
    std::bernoulli_distribution neg(0.5), arg(shape.with_args);
    return Literal{pool_atom(atom(rng), arg(rng)), neg(rng) ? Polarity::Negative : Polarity::Positive};
}

inline Entity random_entity(std::mt19937_64& rng, const std::string& id, const EntityShape& shape = {}) {
    std::uniform_int_distribution<std::size_t> size(0, shape.max_literals);
    LiteralSet literals;
    const std::size_t n = size(rng);
    for (std::size_t i = 0; i < n; ++i) literals.insert(random_literal(rng, shape));
    return Entity(id, std::move(literals));
}

// Consistent by construction: each atom gets at most one polarity.
inline Entity random_consistent_entity(std::mt19937_64& rng, const std::string& id, const EntityShape& shape = {}) {
    Entity raw = random_entity(rng, id, shape);
    LiteralSet kept;
    for (const auto& lit : raw.literals())
        if (!kept.count(complement(lit))) kept.insert(lit);
    return Entity(id, std::move(kept));
}

inline KnowledgeBase random_kb(std::mt19937_64& rng, std::size_t max_entities = 8, const EntityShape& shape = {}) {
    std::uniform_int_distribution<std::size_t> count(1, max_entities);
    KnowledgeBase kb;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) kb.add(random_entity(rng, "E" + std::to_string(i), shape));
    return kb;
}

inline Entity with_literals(const Entity& k, std::initializer_list<Literal> extra) {
    LiteralSet lits = k.literals();
    lits.insert(extra.begin(), extra.end());
    return Entity(k.id(), std::move(lits));
}

}  // namespace paracon::testing
