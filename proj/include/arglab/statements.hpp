#ifndef ARGLAB_STATEMENTS_HPP
#define ARGLAB_STATEMENTS_HPP

#include "arglab/af.hpp"
#include "arglab/enumeration.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arglab {

// Conclusion assignment from arguments to statements, plus contrary pairs
// and the declared vocabulary. Immutable after construction.
class ClaimMap {
public:
    ClaimMap() = default;

    // conclusions: argument -> statement (at most one per argument);
    // contraries: unordered statement pairs, at most one partner each;
    // declared: statements in the vocabulary even without any argument.
    // The vocabulary is the union of declared statements and every statement
    // mentioned in a conclusion or contrary. Throws SyntaxError on a bad
    // token, ConflictingContrary, DuplicateConclusion.
    static ClaimMap make(const std::vector<std::pair<std::string, std::string>>& conclusions,
                         const std::vector<std::pair<std::string, std::string>>& contraries,
                         const std::vector<std::string>& declared);

    const std::map<std::string, std::string>& conclusions() const { return conclusion_; }
    // Sorted vocabulary.
    const std::vector<std::string>& vocabulary() const { return vocabulary_; }

    bool has_statement(std::string_view s) const;
    std::optional<std::string> contrary_of(std::string_view s) const;
    std::optional<std::string> conclusion_of(std::string_view argument) const;

private:
    std::map<std::string, std::string> conclusion_;
    std::map<std::string, std::string> contrary_;  // stored symmetrically
    std::vector<std::string> vocabulary_;          // sorted
};

// Parses the claims fact format:
//
//   conc(<argument>,<statement>).
//   contrary(<s>,<t>).
//   statement(<s>).
//   % comment
//
// Throws SyntaxError(line), ConflictingContrary, DuplicateConclusion.
ClaimMap parse_claims(std::string_view source);
ClaimMap parse_claims_file(const std::string& path);

// Statement labelling schemes, from two labels up to the engagement-aware
// six: {yes,no}, {yes,fal,ni}, {yes,fal,unk,ni},
// {yes,fal,off,unk,ni_open,ni_committed}.
enum class Scheme { bivalent, doubt_tolerant, ignorance_aware, engagement_aware };

std::string_view to_string(Scheme scheme);
// Accepts the kebab-case CLI spellings (doubt-tolerant, ignorance-aware,
// engagement-aware) as well as the snake_case identifiers.
std::optional<Scheme> scheme_from_string(std::string_view name);

enum class StatementLabel : unsigned char {
    yes,           // some pro argument is sceptically accepted
    no,            // bivalent catch-all for everything else
    fal,           // the contrary is sceptically accepted
    unk,           // no argument bears on the statement at all
    ni,            // evidence present but not decisive
    off,           // statement outside the vocabulary (engagement-aware)
    ni_open,       // undecided, but other labels remain credulously possible
    ni_committed,  // undecided in every complete labelling: settled
};

std::string_view to_string(StatementLabel label);

// Label plus the both-sides-accepted diagnostic. conflict is set when the
// statement and its contrary are each backed by a sceptically accepted
// argument; the label then resolves to ni / ni_open where the scheme allows.
struct StatementVerdict {
    StatementLabel label;
    bool conflict = false;

    bool operator==(const StatementVerdict&) const = default;
};

// Arguments concluding s, and arguments concluding the contrary of s (empty
// when s has no contrary), both restricted to af and in canonical order.
// Throws OffVocabulary.
std::pair<std::vector<std::string>, std::vector<std::string>> pro_con(
    const ClaimMap& cm, const ArgumentationFramework& af, std::string_view s);

// True iff some argument concluding s has justification status exactly {in}.
bool sceptically_accepted(const ArgumentationFramework& af, const ClaimMap& cm,
                          std::string_view s);
bool sceptically_accepted(const ArgumentationFramework& af, const ClaimMap& cm,
                          std::string_view s, const std::vector<JustificationStatus>& statuses);

// Statement evaluation under the chosen scheme. Schemes other than
// engagement_aware throw OffVocabulary for statements outside the
// vocabulary; engagement_aware labels them off.
StatementVerdict label_statement(const ArgumentationFramework& af, const ClaimMap& cm,
                                 std::string_view s, Scheme scheme);
StatementVerdict label_statement(const ArgumentationFramework& af, const ClaimMap& cm,
                                 std::string_view s, Scheme scheme,
                                 const std::vector<JustificationStatus>& statuses);

// Every vocabulary statement, labelled from one shared justification pass.
std::map<std::string, StatementVerdict> label_all_statements(const ArgumentationFramework& af,
                                                             const ClaimMap& cm, Scheme scheme);

} // namespace arglab

#endif
