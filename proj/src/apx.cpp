#include "af/apx.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace af {

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineLexer {
    std::string_view text;
    std::size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(line, std::string("expected '") + c + "'");
        ++pos;
    }
    std::string name() {
        skip_ws();
        std::size_t begin = pos;
        while (pos < text.size() && name_char(text[pos])) ++pos;
        if (pos == begin) throw ParseError(line, "expected argument name");
        return std::string(text.substr(begin, pos - begin));
    }
};

}  // namespace

Framework parse_apx(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, ArgId> ids;
    std::vector<Attack> attacks;
    std::set<Attack> seen_attacks;

    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        std::string_view line = text.substr(begin, end == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : end - begin);
        begin = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        LineLexer lex{line, 0, line_no};
        if (lex.done()) continue;
        if (line[lex.pos] == '#') continue;

        std::string keyword = lex.name();
        auto lookup = [&](const std::string& name) {
            auto it = ids.find(name);
            if (it == ids.end()) throw ParseError(line_no, "undeclared argument " + name);
            return it->second;
        };
        if (keyword == "arg") {
            lex.expect('(');
            std::string name = lex.name();
            lex.expect(')');
            lex.expect('.');
            if (!ids.emplace(name, static_cast<ArgId>(names.size())).second)
                throw ParseError(line_no, "duplicate argument declaration " + name);
            names.push_back(std::move(name));
        } else if (keyword == "att") {
            lex.expect('(');
            ArgId source = lookup(lex.name());
            lex.expect(',');
            ArgId target = lookup(lex.name());
            lex.expect(')');
            lex.expect('.');
            Attack at{source, target};
            if (!seen_attacks.insert(at).second)
                throw ParseError(line_no, "duplicate attack declaration");
            attacks.push_back(at);
        } else {
            throw ParseError(line_no, "unknown fact " + keyword);
        }
        if (!lex.done()) throw ParseError(line_no, "trailing text after fact");
    }
    if (names.empty()) throw ParseError(line_no, "empty argument set");
    return Framework(std::move(names), std::move(attacks));
}

std::string serialize_apx(const Framework& f) {
    std::ostringstream out;
    for (ArgId a = 0; a < f.size(); ++a) out << "arg(" << f.name(a) << ").\n";
    for (const Attack& at : f.attacks())
        out << "att(" << f.name(at.source) << "," << f.name(at.target) << ").\n";
    return out.str();
}

}  // namespace af
