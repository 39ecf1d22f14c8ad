#include "arglab/af.hpp"

#include "arglab/errors.hpp"
#include "fact_parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace arglab {

bool is_valid_token(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

ArgumentationFramework ArgumentationFramework::make(
    const std::vector<std::string>& arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
    for (const std::string& id : arguments) {
        if (!is_valid_token(id)) throw SyntaxError("invalid argument name: " + id, 0);
    }
    std::vector<std::string> names = arguments;
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
        if (names[i] == names[i + 1]) throw DuplicateArgument(names[i], 0);
    }

    auto index_in = [&names](const std::string& id) {
        auto it = std::lower_bound(names.begin(), names.end(), id);
        if (it == names.end() || *it != id) throw UndeclaredArgument(id, 0);
        return static_cast<std::size_t>(it - names.begin());
    };
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [from, to] : attacks) edges.emplace(index_in(from), index_in(to));

    ArgumentationFramework af;
    af.names_ = std::move(names);
    af.attackers_.resize(af.names_.size());
    af.targets_.resize(af.names_.size());
    for (const auto& [from, to] : edges) {
        af.targets_[from].push_back(to);
        af.attackers_[to].push_back(from);
    }
    af.attack_count_ = edges.size();
    return af;
}

bool ArgumentationFramework::contains(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    return it != names_.end() && *it == name;
}

std::size_t ArgumentationFramework::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) throw UnknownArgument(std::string(name));
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::string> ArgumentationFramework::attackers_of(std::string_view name) const {
    std::vector<std::string> result;
    for (std::size_t idx : attackers_[index_of(name)]) result.push_back(names_[idx]);
    return result;
}

bool ArgumentationFramework::has_attack(std::string_view attacker, std::string_view target) const {
    if (!contains(attacker) || !contains(target)) return false;
    const auto& row = targets_[index_of(attacker)];
    return std::binary_search(row.begin(), row.end(), index_of(target));
}

std::vector<std::pair<std::string, std::string>> ArgumentationFramework::attacks() const {
    std::vector<std::pair<std::string, std::string>> result;
    result.reserve(attack_count_);
    for (std::size_t from = 0; from < names_.size(); ++from) {
        for (std::size_t to : targets_[from]) result.emplace_back(names_[from], names_[to]);
    }
    return result;
}

std::string ArgumentationFramework::to_apx() const {
    std::ostringstream out;
    for (const std::string& name : names_) out << "arg(" << name << ").\n";
    for (const auto& [from, to] : attacks()) out << "att(" << from << "," << to << ").\n";
    return out.str();
}

ArgumentationFramework parse_af(std::string_view source) {
    std::vector<std::string> arguments;
    std::vector<std::pair<std::string, std::string>> attacks;
    std::vector<std::pair<std::string, int>> attack_endpoints;
    for (const detail::Fact& fact : detail::parse_facts(source)) {
        if (fact.predicate == "arg" && fact.args.size() == 1) {
            if (std::find(arguments.begin(), arguments.end(), fact.args[0]) != arguments.end()) {
                throw DuplicateArgument(fact.args[0], fact.line);
            }
            arguments.push_back(fact.args[0]);
        } else if (fact.predicate == "att" && fact.args.size() == 2) {
            attacks.emplace_back(fact.args[0], fact.args[1]);
            attack_endpoints.emplace_back(fact.args[0], fact.line);
            attack_endpoints.emplace_back(fact.args[1], fact.line);
        } else {
            throw SyntaxError("expected arg(<id>). or att(<id>,<id>). but got "
                                  + fact.predicate + " with " + std::to_string(fact.args.size())
                                  + " argument(s)",
                              fact.line);
        }
    }
    // Endpoints may be declared after the attack that uses them, so check
    // only once all facts are in.
    for (const auto& [id, line] : attack_endpoints) {
        if (std::find(arguments.begin(), arguments.end(), id) == arguments.end()) {
            throw UndeclaredArgument(id, line);
        }
    }
    return ArgumentationFramework::make(arguments, attacks);
}

ArgumentationFramework parse_af_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_af(buffer.str());
}

} // namespace arglab
