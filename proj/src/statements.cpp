#include "arglab/statements.hpp"

#include "arglab/errors.hpp"
#include "fact_parser.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace arglab {

ClaimMap ClaimMap::make(const std::vector<std::pair<std::string, std::string>>& conclusions,
                        const std::vector<std::pair<std::string, std::string>>& contraries,
                        const std::vector<std::string>& declared) {
    ClaimMap cm;
    std::set<std::string> vocab;

    auto check_token = [](const std::string& tok) {
        if (!is_valid_token(tok)) throw SyntaxError("invalid token: " + tok, 0);
    };

    for (const auto& [argument, statement] : conclusions) {
        check_token(argument);
        check_token(statement);
        if (cm.conclusion_.count(argument)) throw DuplicateConclusion(argument);
        cm.conclusion_[argument] = statement;
        vocab.insert(statement);
    }
    for (const auto& [s, t] : contraries) {
        check_token(s);
        check_token(t);
        if (s == t) throw ConflictingContrary(s);
        auto s_it = cm.contrary_.find(s);
        auto t_it = cm.contrary_.find(t);
        // Re-declaring the same pair (in either order) is harmless.
        if (s_it != cm.contrary_.end() && s_it->second != t) throw ConflictingContrary(s);
        if (t_it != cm.contrary_.end() && t_it->second != s) throw ConflictingContrary(t);
        cm.contrary_[s] = t;
        cm.contrary_[t] = s;
        vocab.insert(s);
        vocab.insert(t);
    }
    for (const std::string& s : declared) {
        check_token(s);
        vocab.insert(s);
    }
    cm.vocabulary_.assign(vocab.begin(), vocab.end());
    return cm;
}

bool ClaimMap::has_statement(std::string_view s) const {
    auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), s);
    return it != vocabulary_.end() && *it == s;
}

std::optional<std::string> ClaimMap::contrary_of(std::string_view s) const {
    auto it = contrary_.find(std::string(s));
    if (it == contrary_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> ClaimMap::conclusion_of(std::string_view argument) const {
    auto it = conclusion_.find(std::string(argument));
    if (it == conclusion_.end()) return std::nullopt;
    return it->second;
}

ClaimMap parse_claims(std::string_view source) {
    std::vector<std::pair<std::string, std::string>> conclusions;
    std::vector<std::pair<std::string, std::string>> contraries;
    std::vector<std::string> declared;
    for (const detail::Fact& fact : detail::parse_facts(source)) {
        if (fact.predicate == "conc" && fact.args.size() == 2) {
            conclusions.emplace_back(fact.args[0], fact.args[1]);
        } else if (fact.predicate == "contrary" && fact.args.size() == 2) {
            contraries.emplace_back(fact.args[0], fact.args[1]);
        } else if (fact.predicate == "statement" && fact.args.size() == 1) {
            declared.push_back(fact.args[0]);
        } else {
            throw SyntaxError(
                "expected conc(<arg>,<stmt>). contrary(<s>,<t>). or statement(<s>). but got "
                    + fact.predicate + " with " + std::to_string(fact.args.size())
                    + " argument(s)",
                fact.line);
        }
    }
    return ClaimMap::make(conclusions, contraries, declared);
}

ClaimMap parse_claims_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_claims(buffer.str());
}

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::bivalent: return "bivalent";
        case Scheme::doubt_tolerant: return "doubt_tolerant";
        case Scheme::ignorance_aware: return "ignorance_aware";
        case Scheme::engagement_aware: return "engagement_aware";
    }
    return "?";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
    if (name == "bivalent") return Scheme::bivalent;
    if (name == "doubt-tolerant" || name == "doubt_tolerant") return Scheme::doubt_tolerant;
    if (name == "ignorance-aware" || name == "ignorance_aware") return Scheme::ignorance_aware;
    if (name == "engagement-aware" || name == "engagement_aware") return Scheme::engagement_aware;
    return std::nullopt;
}

std::string_view to_string(StatementLabel label) {
    switch (label) {
        case StatementLabel::yes: return "yes";
        case StatementLabel::no: return "no";
        case StatementLabel::fal: return "fal";
        case StatementLabel::unk: return "unk";
        case StatementLabel::ni: return "ni";
        case StatementLabel::off: return "off";
        case StatementLabel::ni_open: return "ni_open";
        case StatementLabel::ni_committed: return "ni_committed";
    }
    return "?";
}

std::pair<std::vector<std::string>, std::vector<std::string>> pro_con(
    const ClaimMap& cm, const ArgumentationFramework& af, std::string_view s) {
    if (!cm.has_statement(s)) throw OffVocabulary(std::string(s));
    std::optional<std::string> contrary = cm.contrary_of(s);
    std::vector<std::string> pro;
    std::vector<std::string> con;
    // Iterating the framework keeps both sides in canonical order; claims
    // about arguments outside the framework are inert.
    for (const std::string& argument : af.arguments()) {
        std::optional<std::string> conclusion = cm.conclusion_of(argument);
        if (!conclusion) continue;
        if (*conclusion == s) pro.push_back(argument);
        if (contrary && *conclusion == *contrary) con.push_back(argument);
    }
    return {pro, con};
}

namespace {

bool any_sceptically_in(const ArgumentationFramework& af, const std::vector<std::string>& args,
                        const std::vector<JustificationStatus>& statuses) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return statuses[af.index_of(a)] == JustificationStatus::of({Label::in});
    });
}

} // namespace

bool sceptically_accepted(const ArgumentationFramework& af, const ClaimMap& cm,
                          std::string_view s) {
    return sceptically_accepted(af, cm, s, justification_map(af));
}

bool sceptically_accepted(const ArgumentationFramework& af, const ClaimMap& cm,
                          std::string_view s,
                          const std::vector<JustificationStatus>& statuses) {
    auto [pro, con] = pro_con(cm, af, s);
    return any_sceptically_in(af, pro, statuses);
}

StatementVerdict label_statement(const ArgumentationFramework& af, const ClaimMap& cm,
                                 std::string_view s, Scheme scheme) {
    return label_statement(af, cm, s, scheme, justification_map(af));
}

StatementVerdict label_statement(const ArgumentationFramework& af, const ClaimMap& cm,
                                 std::string_view s, Scheme scheme,
                                 const std::vector<JustificationStatus>& statuses) {
    if (!cm.has_statement(s)) {
        if (scheme == Scheme::engagement_aware) return {StatementLabel::off};
        throw OffVocabulary(std::string(s));
    }
    auto [pro, con] = pro_con(cm, af, s);
    const bool pro_accepted = any_sceptically_in(af, pro, statuses);
    const bool con_accepted = any_sceptically_in(af, con, statuses);
    const bool conflict = pro_accepted && con_accepted;
    const bool no_evidence = pro.empty() && con.empty();

    switch (scheme) {
        case Scheme::bivalent:
            // The two-label scheme cannot express the clash; the diagnostic
            // still travels with the verdict.
            return {pro_accepted ? StatementLabel::yes : StatementLabel::no, conflict};
        case Scheme::doubt_tolerant:
            if (conflict) return {StatementLabel::ni, true};
            if (pro_accepted) return {StatementLabel::yes};
            if (con_accepted) return {StatementLabel::fal};
            return {StatementLabel::ni};
        case Scheme::ignorance_aware:
            if (conflict) return {StatementLabel::ni, true};
            if (pro_accepted) return {StatementLabel::yes};
            if (con_accepted) return {StatementLabel::fal};
            if (no_evidence) return {StatementLabel::unk};
            return {StatementLabel::ni};
        case Scheme::engagement_aware: {
            if (conflict) return {StatementLabel::ni_open, true};
            if (pro_accepted) return {StatementLabel::yes};
            if (con_accepted) return {StatementLabel::fal};
            if (no_evidence) return {StatementLabel::unk};
            // Committed indecision: every argument bearing on s is undec in
            // every complete labelling, so no further argument order can
            // shake the verdict. Any credulous in or out keeps it open.
            const JustificationStatus settled = JustificationStatus::of({Label::undec});
            bool all_settled = true;
            for (const auto* side : {&pro, &con}) {
                for (const std::string& a : *side) {
                    if (statuses[af.index_of(a)] != settled) {
                        all_settled = false;
                        break;
                    }
                }
                if (!all_settled) break;
            }
            return {all_settled ? StatementLabel::ni_committed : StatementLabel::ni_open};
        }
    }
    return {StatementLabel::ni};
}

std::map<std::string, StatementVerdict> label_all_statements(const ArgumentationFramework& af,
                                                             const ClaimMap& cm, Scheme scheme) {
    std::vector<JustificationStatus> statuses = justification_map(af);
    std::map<std::string, StatementVerdict> result;
    for (const std::string& s : cm.vocabulary()) {
        result[s] = label_statement(af, cm, s, scheme, statuses);
    }
    return result;
}

} // namespace arglab
