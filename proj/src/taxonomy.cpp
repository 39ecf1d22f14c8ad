#include "arglab/taxonomy.hpp"

#include "arglab/errors.hpp"
#include "arglab/statements.hpp"

namespace arglab {

std::string_view to_string(AcceptanceClass cls) {
    switch (cls) {
        case AcceptanceClass::strongly_accepted: return "strongly_accepted";
        case AcceptanceClass::weakly_accepted: return "weakly_accepted";
        case AcceptanceClass::strongly_rejected: return "strongly_rejected";
        case AcceptanceClass::weakly_rejected: return "weakly_rejected";
        case AcceptanceClass::determined_borderline: return "determined_borderline";
        case AcceptanceClass::undetermined_borderline: return "undetermined_borderline";
    }
    return "?";
}

AcceptanceClass classify_status(const JustificationStatus& status) {
    const bool in = status.contains(Label::in);
    const bool out = status.contains(Label::out);
    const bool undec = status.contains(Label::undec);
    if (status.empty()) throw UnrealizableStatus("empty justification status");
    if (in && out && !undec) {
        throw UnrealizableStatus("status {in,out} is excluded by abstention");
    }
    if (in && out) return AcceptanceClass::undetermined_borderline;
    if (in && undec) return AcceptanceClass::weakly_accepted;
    if (out && undec) return AcceptanceClass::weakly_rejected;
    if (in) return AcceptanceClass::strongly_accepted;
    if (out) return AcceptanceClass::strongly_rejected;
    return AcceptanceClass::determined_borderline;
}

std::string_view to_string(IndecisionForm form) {
    switch (form) {
        case IndecisionForm::off_language: return "off_language";
        case IndecisionForm::unconsidered: return "unconsidered";
        case IndecisionForm::open: return "open";
        case IndecisionForm::committed: return "committed";
    }
    return "?";
}

int engagement_rank(IndecisionForm form) {
    return static_cast<int>(form);
}

std::optional<IndecisionForm> indecision_form_of(StatementLabel label) {
    switch (label) {
        case StatementLabel::off: return IndecisionForm::off_language;
        case StatementLabel::unk: return IndecisionForm::unconsidered;
        case StatementLabel::ni_open: return IndecisionForm::open;
        case StatementLabel::ni_committed: return IndecisionForm::committed;
        default: return std::nullopt;
    }
}

} // namespace arglab
