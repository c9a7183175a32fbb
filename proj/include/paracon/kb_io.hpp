#pragma once

// KB text format, one entity per line:
//
//   @version 1                      # optional, first directive only
//   K1: fievre, toux, !maux_de_tete
//   K2: parent(alice, bob), ¬p
//
// '!' or '¬' negates; '#' starts a comment; blank lines are ignored.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paracon/kb_model.hpp"

namespace paracon {

inline constexpr std::string_view kKbFormatVersion = "1";

struct KbDocument {
    std::string version{kKbFormatVersion};
    std::vector<std::pair<std::string, std::vector<std::string>>> entities;
};

// Syntax only: literal strings are kept verbatim (trimmed). Throws ParseError.
KbDocument parse_document(std::string_view text);

// Throws ParseError on a malformed literal, DuplicateIdError on a repeated id.
KnowledgeBase to_knowledge_base(const KbDocument& doc);

KnowledgeBase parse_kb(std::string_view text);

// Parses a single literal such as "!p(a,b)". Throws ParseError (line 1).
Literal parse_literal(std::string_view text);

// Canonical text: version directive, entities in KB order, literals in set order.
std::string serialize_kb(const KnowledgeBase& kb);

// Reads and parses a file; throws Error when it cannot be opened.
KnowledgeBase load_kb_file(const std::string& path);

}  // namespace paracon
