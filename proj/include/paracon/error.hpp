#pragma once

#include <stdexcept>
#include <string>

namespace paracon {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised by the KB text parser; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DuplicateIdError : public Error {
public:
    explicit DuplicateIdError(const std::string& id)
        : Error("duplicate entity id '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class UnknownIdError : public Error {
public:
    explicit UnknownIdError(const std::string& id)
        : Error("unknown entity id '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

// E(K) = K for a non-empty entity: no literal survives every repair.
class IrreparableEntityError : public Error {
public:
    explicit IrreparableEntityError(const std::string& id)
        : Error("entity '" + id + "' is irreparable: every literal is involved in a contradiction"),
          id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

}  // namespace paracon
