#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace paracon {

// A ground atom: predicate name plus an ordered, possibly empty, tuple of
// ground terms. Equality and ordering are structural.
class Atom {
public:
    explicit Atom(std::string name, std::vector<std::string> args = {});

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& args() const noexcept { return args_; }

    // name or name(a,b)
    std::string to_string() const;

    friend auto operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;

private:
    std::string name_;
    std::vector<std::string> args_;
};

enum class Polarity : unsigned char { Positive, Negative };

struct Literal {
    Atom atom;
    Polarity polarity = Polarity::Positive;

    bool is_positive() const noexcept { return polarity == Polarity::Positive; }
    // "!name(args)" for negative literals
    std::string to_string() const;

    friend auto operator<=>(const Literal&, const Literal&) = default;
    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal positive(Atom atom) { return Literal{std::move(atom), Polarity::Positive}; }
inline Literal negative(Atom atom) { return Literal{std::move(atom), Polarity::Negative}; }

Literal complement(const Literal& literal);

using LiteralSet = std::set<Literal>;
using AtomSet = std::set<Atom>;

// One knowledge entry: an identified finite set of literals.
class Entity {
public:
    Entity() = default;
    Entity(std::string id, LiteralSet literals);
    Entity(std::string id, std::initializer_list<Literal> literals);

    const std::string& id() const noexcept { return id_; }
    const LiteralSet& literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }
    bool empty() const noexcept { return literals_.empty(); }
    bool contains(const Literal& literal) const { return literals_.count(literal) != 0; }

    friend bool operator==(const Entity&, const Entity&) = default;

private:
    std::string id_;
    LiteralSet literals_;
};

// True iff no atom occurs in the entity with both polarities.
bool is_internally_consistent(const Entity& entity);

// Entities in input order with pairwise-distinct ids.
class KnowledgeBase {
public:
    KnowledgeBase() = default;
    explicit KnowledgeBase(std::vector<Entity> entities);

    // Throws DuplicateIdError.
    void add(Entity entity);

    const std::vector<Entity>& entities() const noexcept { return entities_; }
    std::size_t size() const noexcept { return entities_.size(); }
    bool empty() const noexcept { return entities_.empty(); }
    const Entity& operator[](std::size_t i) const { return entities_[i]; }

    auto begin() const noexcept { return entities_.begin(); }
    auto end() const noexcept { return entities_.end(); }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    // Throws UnknownIdError.
    const Entity& at(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;

    friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) { return a.entities_ == b.entities_; }

private:
    std::vector<Entity> entities_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace paracon
