#ifndef ARGLAB_SEMANTICS_HPP
#define ARGLAB_SEMANTICS_HPP

#include "arglab/af.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arglab {

// The three argument labels. The enumerator order in < out < undec is the
// total order used for serialization and for the canonical ordering of
// labellings.
enum class Label : unsigned char { in = 0, out = 1, undec = 2 };

std::string_view to_string(Label label);

// A labelling is a total assignment of labels, indexed by the framework's
// canonical argument order. It is a plain value; totality against a given
// framework is checked at operation entry.
using Labelling = std::vector<Label>;

// Builds a labelling over af from named assignments, filling unmentioned
// arguments with `fill`. Throws UnknownArgument.
Labelling make_labelling(const ArgumentationFramework& af,
                         std::initializer_list<std::pair<std::string_view, Label>> assignments,
                         Label fill = Label::undec);

// Whether the argument's current label is legal:
//   in    - every attacker is labelled out
//   out   - some attacker is labelled in
//   undec - no attacker is labelled in, and some attacker is not labelled out
// Throws PartialLabelling when lab is not total over af, UnknownArgument when
// the argument is not in af.
bool is_legal(const ArgumentationFramework& af, const Labelling& lab, std::size_t index);
bool is_legal(const ArgumentationFramework& af, const Labelling& lab, std::string_view name);

// Every in-labelled argument is legally in and every out-labelled argument is
// legally out; undec is unconstrained.
bool is_admissible(const ArgumentationFramework& af, const Labelling& lab);

// Admissible, and every undec-labelled argument is legally undec.
bool is_complete(const ArgumentationFramework& af, const Labelling& lab);

// Three-set notation {{in...},{out...},{undec...}}, each set in canonical
// argument order, the empty set printed as {}.
std::string format_labelling(const ArgumentationFramework& af, const Labelling& lab);

} // namespace arglab

#endif
