#ifndef ARGLAB_AF_HPP
#define ARGLAB_AF_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arglab {

// Immutable directed attack graph over named arguments.
//
// Arguments are kept in lexicographic order of their names; that order is
// the canonical order used by every enumeration and serialization in the
// library. Internally arguments are addressed by their index in that order.
class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    // Builds a framework from explicit argument and attack lists.
    // Throws SyntaxError on a name that is not a valid token,
    // DuplicateArgument on a repeated name, and UndeclaredArgument when an
    // attack endpoint is not listed in arguments. Duplicate attack pairs
    // collapse to one edge.
    static ArgumentationFramework make(
        const std::vector<std::string>& arguments,
        const std::vector<std::pair<std::string, std::string>>& attacks);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& arguments() const { return names_; }

    bool contains(std::string_view name) const;
    // Index of name in canonical order; throws UnknownArgument.
    std::size_t index_of(std::string_view name) const;
    const std::string& name(std::size_t index) const { return names_[index]; }

    // Sorted indices of the arguments attacking / attacked by index.
    const std::vector<std::size_t>& attackers(std::size_t index) const { return attackers_[index]; }
    const std::vector<std::size_t>& targets(std::size_t index) const { return targets_[index]; }

    // Names of the attackers of the given argument, in canonical order.
    // Throws UnknownArgument when the argument is not in the framework.
    std::vector<std::string> attackers_of(std::string_view name) const;

    bool has_attack(std::string_view attacker, std::string_view target) const;
    std::size_t attack_count() const { return attack_count_; }

    // All attacks as name pairs, sorted by (attacker, target).
    std::vector<std::pair<std::string, std::string>> attacks() const;

    // Serialization in the same fact format accepted by parse_af.
    std::string to_apx() const;

    bool operator==(const ArgumentationFramework&) const = default;

private:
    std::vector<std::string> names_;                   // sorted
    std::vector<std::vector<std::size_t>> attackers_;  // per argument, sorted
    std::vector<std::vector<std::size_t>> targets_;    // per argument, sorted
    std::size_t attack_count_ = 0;
};

using AF = ArgumentationFramework;

// True when name matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_token(std::string_view name);

// Parses the fact format:
//
//   arg(<id>).
//   att(<attacker>,<target>).
//   % comment to end of line
//
// Whitespace is ignored around tokens and punctuation; several facts may
// share a line. Throws SyntaxError, DuplicateArgument, UndeclaredArgument.
ArgumentationFramework parse_af(std::string_view source);

// Reads and parses a whole file; throws Error when the file cannot be read.
ArgumentationFramework parse_af_file(const std::string& path);

} // namespace arglab

#endif
