#ifndef ARGLAB_FACT_PARSER_HPP
#define ARGLAB_FACT_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace arglab::detail {

// One `pred(tok,...).` fact with the 1-based line it came from.
struct Fact {
    std::string predicate;
    std::vector<std::string> args;
    int line = 0;
};

// Splits a fact-format source into facts. `%` starts a comment. Whitespace
// is free between tokens; a line may carry several facts but a fact may not
// span lines. Tokens must match [A-Za-z][A-Za-z0-9_]*. Throws SyntaxError.
std::vector<Fact> parse_facts(std::string_view source);

} // namespace arglab::detail

#endif
