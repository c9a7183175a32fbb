#include "paracon/kb_model.hpp"

#include "paracon/error.hpp"

namespace paracon {

Atom::Atom(std::string name, std::vector<std::string> args) : name_(std::move(name)), args_(std::move(args)) {
    if (name_.empty()) throw PreconditionError("atom name must not be empty");
    if (name_.find('!') != std::string::npos || name_.find("\xC2\xAC") != std::string::npos)
        throw PreconditionError("atom name '" + name_ + "' contains a negation marker");
    for (const auto& arg : args_)
        if (arg.empty()) throw PreconditionError("atom '" + name_ + "' has an empty argument");
}

std::string Atom::to_string() const {
    if (args_.empty()) return name_;
    std::string out = name_ + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ",";
        out += args_[i];
    }
    return out + ")";
}

std::string Literal::to_string() const {
    return is_positive() ? atom.to_string() : "!" + atom.to_string();
}

Literal complement(const Literal& literal) {
    return Literal{literal.atom, literal.is_positive() ? Polarity::Negative : Polarity::Positive};
}

Entity::Entity(std::string id, LiteralSet literals) : id_(std::move(id)), literals_(std::move(literals)) {
    if (id_.empty()) throw PreconditionError("entity id must not be empty");
}

Entity::Entity(std::string id, std::initializer_list<Literal> literals)
    : Entity(std::move(id), LiteralSet(literals)) {}

bool is_internally_consistent(const Entity& entity) {
    // Set order puts a+ directly before a-, so a clash is always adjacent.
    const auto& lits = entity.literals();
    for (auto it = lits.begin(); it != lits.end(); ++it) {
        auto next = std::next(it);
        if (next != lits.end() && next->atom == it->atom) return false;
    }
    return true;
}

KnowledgeBase::KnowledgeBase(std::vector<Entity> entities) {
    entities_.reserve(entities.size());
    for (auto& e : entities) add(std::move(e));
}

void KnowledgeBase::add(Entity entity) {
    if (index_.count(entity.id())) throw DuplicateIdError(entity.id());
    index_.emplace(entity.id(), entities_.size());
    entities_.push_back(std::move(entity));
}

const Entity& KnowledgeBase::at(const std::string& id) const {
    return entities_[index_of(id)];
}

std::size_t KnowledgeBase::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownIdError(id);
    return it->second;
}

}  // namespace paracon
