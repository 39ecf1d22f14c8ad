#include "fact_parser.hpp"

#include "arglab/af.hpp"
#include "arglab/errors.hpp"

#include <cctype>

namespace arglab::detail {

namespace {

bool token_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }

    void expect(char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c) {
            throw SyntaxError("expected '" + std::string(1, c) + "' in: " + std::string(text), line);
        }
        ++pos;
    }

    std::string token() {
        skip_space();
        std::size_t start = pos;
        if (pos >= text.size() || !token_start(text[pos])) {
            throw SyntaxError("expected identifier in: " + std::string(text), line);
        }
        while (pos < text.size() && token_char(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace

std::vector<Fact> parse_facts(std::string_view source) {
    std::vector<Fact> facts;
    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= source.size()) {
        std::size_t end = source.find('\n', begin);
        if (end == std::string_view::npos) end = source.size();
        std::string_view line = source.substr(begin, end - begin);
        ++line_no;
        begin = end + 1;
        if (end == source.size() && line.empty() && line_no > 1) break;

        std::size_t comment = line.find('%');
        if (comment != std::string_view::npos) line = line.substr(0, comment);

        LineScanner scan{line, 0, line_no};
        while (!scan.done()) {
            Fact fact;
            fact.line = line_no;
            fact.predicate = scan.token();
            scan.expect('(');
            fact.args.push_back(scan.token());
            scan.skip_space();
            while (!scan.done() && scan.peek() == ',') {
                scan.expect(',');
                fact.args.push_back(scan.token());
                scan.skip_space();
            }
            scan.expect(')');
            scan.expect('.');
            facts.push_back(std::move(fact));
        }
    }
    return facts;
}

} // namespace arglab::detail
