#include "arglab/semantics.hpp"

#include "arglab/errors.hpp"

#include <sstream>

namespace arglab {

std::string_view to_string(Label label) {
    switch (label) {
        case Label::in: return "in";
        case Label::out: return "out";
        case Label::undec: return "undec";
    }
    return "?";
}

Labelling make_labelling(const ArgumentationFramework& af,
                         std::initializer_list<std::pair<std::string_view, Label>> assignments,
                         Label fill) {
    Labelling lab(af.size(), fill);
    for (const auto& [name, label] : assignments) lab[af.index_of(name)] = label;
    return lab;
}

namespace {

void check_total(const ArgumentationFramework& af, const Labelling& lab) {
    if (lab.size() != af.size()) throw PartialLabelling(lab.size(), af.size());
}

bool legal_at(const ArgumentationFramework& af, const Labelling& lab, std::size_t index) {
    const auto& attackers = af.attackers(index);
    switch (lab[index]) {
        case Label::in:
            for (std::size_t b : attackers) {
                if (lab[b] != Label::out) return false;
            }
            return true;
        case Label::out:
            for (std::size_t b : attackers) {
                if (lab[b] == Label::in) return true;
            }
            return false;
        case Label::undec: {
            // No attacker in, and at least one attacker not out. The second
            // clause fails on an empty attacker set, so an unattacked
            // argument is never legally undec.
            bool some_not_out = false;
            for (std::size_t b : attackers) {
                if (lab[b] == Label::in) return false;
                if (lab[b] != Label::out) some_not_out = true;
            }
            return some_not_out;
        }
    }
    return false;
}

} // namespace

bool is_legal(const ArgumentationFramework& af, const Labelling& lab, std::size_t index) {
    check_total(af, lab);
    if (index >= af.size()) throw UnknownArgument("#" + std::to_string(index));
    return legal_at(af, lab, index);
}

bool is_legal(const ArgumentationFramework& af, const Labelling& lab, std::string_view name) {
    check_total(af, lab);
    return legal_at(af, lab, af.index_of(name));
}

bool is_admissible(const ArgumentationFramework& af, const Labelling& lab) {
    check_total(af, lab);
    for (std::size_t i = 0; i < af.size(); ++i) {
        if (lab[i] != Label::undec && !legal_at(af, lab, i)) return false;
    }
    return true;
}

bool is_complete(const ArgumentationFramework& af, const Labelling& lab) {
    check_total(af, lab);
    for (std::size_t i = 0; i < af.size(); ++i) {
        if (!legal_at(af, lab, i)) return false;
    }
    return true;
}

std::string format_labelling(const ArgumentationFramework& af, const Labelling& lab) {
    if (lab.size() != af.size()) throw PartialLabelling(lab.size(), af.size());
    std::ostringstream out;
    out << '{';
    for (Label wanted : {Label::in, Label::out, Label::undec}) {
        if (wanted != Label::in) out << ',';
        out << '{';
        bool first = true;
        for (std::size_t i = 0; i < af.size(); ++i) {
            if (lab[i] != wanted) continue;
            if (!first) out << ',';
            out << af.name(i);
            first = false;
        }
        out << '}';
    }
    out << '}';
    return out.str();
}

} // namespace arglab
