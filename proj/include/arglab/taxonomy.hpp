#ifndef ARGLAB_TAXONOMY_HPP
#define ARGLAB_TAXONOMY_HPP

#include "arglab/enumeration.hpp"

#include <optional>
#include <string_view>

namespace arglab {

// Acceptance / rejection / indecision classes, one per realizable
// justification status.
enum class AcceptanceClass {
    strongly_accepted,        // {in}
    weakly_accepted,          // {in,undec}
    strongly_rejected,        // {out}
    weakly_rejected,          // {out,undec}
    determined_borderline,    // {undec}: settled, committed indecision
    undetermined_borderline,  // {in,out,undec}: open indecision
};

std::string_view to_string(AcceptanceClass cls);

// Bijective on the six statuses realizable under complete semantics.
// Throws UnrealizableStatus for the empty status and for {in,out}, which
// abstention rules out.
AcceptanceClass classify_status(const JustificationStatus& status);

// Forms of indecision ranked by how far the evaluation engages with the
// statement: from input outside the system's language up to a settled
// commitment to stay undecided.
enum class IndecisionForm {
    off_language = 0,
    unconsidered = 1,
    open = 2,
    committed = 3,
};

std::string_view to_string(IndecisionForm form);

// Position on the engagement axis; strictly increasing along the order
// off_language < unconsidered < open < committed.
int engagement_rank(IndecisionForm form);

// Defined in statements.hpp; the mapping below ties the statement-level
// indecision labels to their form.
enum class StatementLabel : unsigned char;

// off -> off_language, unk -> unconsidered, ni_open -> open,
// ni_committed -> committed; nullopt for every other label (including the
// plain ni, which does not separate the open and committed readings).
std::optional<IndecisionForm> indecision_form_of(StatementLabel label);

} // namespace arglab

#endif
