#include "paracon/kb_io.hpp"

#include <fstream>
#include <sstream>

#include "paracon/error.hpp"

namespace paracon {

namespace {

constexpr std::string_view kNot = "\xC2\xAC";  // U+00AC, UTF-8

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Scans one line; columns are 1-based byte offsets.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance(std::size_t n = 1) { pos_ += n; }

    bool consume(std::string_view s) {
        if (!starts_with(s)) return false;
        pos_ += s.size();
        return true;
    }

    void expect(char c, const char* what) {
        skip_space();
        if (peek() != c) fail(std::string("expected ") + what);
        ++pos_;
    }

    std::string identifier(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && is_identifier_byte()) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string found = at_end() ? "end of line" : "'" + std::string(1, text_[pos_]) + "'";
        throw ParseError(what + ", found " + found, line_, pos_ + 1);
    }

private:
    bool is_identifier_byte() const {
        const char c = text_[pos_];
        if (is_space(c)) return false;
        switch (c) {
            case ',': case '(': case ')': case ':': case '!': case '#': case '@': return false;
            default: break;
        }
        return !starts_with(kNot);
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

Literal read_literal(Cursor& in) {
    in.skip_space();
    Polarity polarity = Polarity::Positive;
    if (in.consume("!") || in.consume(kNot)) polarity = Polarity::Negative;
    std::string name = in.identifier("atom name");
    std::vector<std::string> args;
    in.skip_space();
    if (in.consume("(")) {
        do {
            args.push_back(in.identifier("ground term"));
            in.skip_space();
        } while (in.consume(","));
        in.expect(')', "',' or ')'");
    }
    return Literal{Atom(std::move(name), std::move(args)), polarity};
}

}  // namespace

KbDocument parse_document(std::string_view text) {
    KbDocument doc;
    bool seen_entity = false;
    bool seen_version = false;
    std::size_t line_no = 0;
    std::size_t start = 0;

    for (;;) {
        ++line_no;
        const auto eol = text.find('\n', start);
        std::string_view line = text.substr(start, eol == std::string_view::npos ? eol : eol - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        Cursor in(line, line_no);
        in.skip_space();
        if (!in.at_end()) {
            if (in.consume("@")) {
                if (in.identifier("directive") != "version") in.fail("unknown directive");
                if (seen_version || seen_entity) in.fail("@version must come first and only once");
                std::string version = in.identifier("version number");
                if (version != kKbFormatVersion)
                    throw ParseError("unsupported format version " + version, line_no, 1);
                doc.version = version;
                seen_version = true;
            } else {
                std::string id = in.identifier("entity id");
                in.expect(':', "':' after entity id");
                std::vector<std::string> literals;
                in.skip_space();
                if (!in.at_end()) {
                    do {
                        literals.push_back(read_literal(in).to_string());
                        in.skip_space();
                    } while (in.consume(","));
                }
                doc.entities.emplace_back(std::move(id), std::move(literals));
                seen_entity = true;
            }
            in.skip_space();
            if (!in.at_end()) in.fail("expected ',' or end of line");
        }

        if (eol == std::string_view::npos) break;
        start = eol + 1;
    }
    return doc;
}

Literal parse_literal(std::string_view text) {
    Cursor in(text, 1);
    Literal lit = read_literal(in);
    in.skip_space();
    if (!in.at_end()) in.fail("unexpected text after literal");
    return lit;
}

KnowledgeBase to_knowledge_base(const KbDocument& doc) {
    KnowledgeBase kb;
    for (const auto& [id, literal_texts] : doc.entities) {
        LiteralSet literals;
        for (const auto& t : literal_texts) literals.insert(parse_literal(t));
        kb.add(Entity(id, std::move(literals)));
    }
    return kb;
}

KnowledgeBase parse_kb(std::string_view text) { return to_knowledge_base(parse_document(text)); }

std::string serialize_kb(const KnowledgeBase& kb) {
    std::string out = "@version " + std::string(kKbFormatVersion) + "\n";
    for (const auto& e : kb) {
        out += e.id() + ":";
        bool first = true;
        for (const auto& lit : e.literals()) {
            out += first ? " " : ", ";
            out += lit.to_string();
            first = false;
        }
        out += "\n";
    }
    return out;
}

KnowledgeBase load_kb_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_kb(buffer.str());
}

}  // namespace paracon
