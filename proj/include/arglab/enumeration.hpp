#ifndef ARGLAB_ENUMERATION_HPP
#define ARGLAB_ENUMERATION_HPP

#include "arglab/af.hpp"
#include "arglab/semantics.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arglab {

// Admissible and complete are the base semantics; grounded, preferred and
// stable are views of the complete set (minimal in-set, maximal in-sets,
// empty undec-set).
enum class SemanticsKind { admissible, complete, grounded, preferred, stable };

std::string_view to_string(SemanticsKind kind);
std::optional<SemanticsKind> semantics_from_string(std::string_view name);

// The set of labels an argument receives across all complete labellings.
// Nonempty for every argument of a framework; {in,out} without undec cannot
// occur under complete semantics.
class JustificationStatus {
public:
    JustificationStatus() = default;

    static JustificationStatus of(std::initializer_list<Label> labels) {
        JustificationStatus status;
        for (Label l : labels) status.add(l);
        return status;
    }

    void add(Label label) { bits_ |= mask(label); }
    bool contains(Label label) const { return bits_ & mask(label); }
    bool empty() const { return bits_ == 0; }
    std::size_t count() const {
        return static_cast<std::size_t>(!!contains(Label::in)) + !!contains(Label::out)
             + !!contains(Label::undec);
    }

    // "{in,out,undec}" with labels in the in < out < undec order.
    std::string to_string() const;
    std::vector<Label> labels() const;

    friend auto operator<=>(const JustificationStatus&, const JustificationStatus&) = default;

private:
    static unsigned char mask(Label label) {
        return static_cast<unsigned char>(1u << static_cast<unsigned char>(label));
    }
    unsigned char bits_ = 0;
};

// All labellings of af satisfying the chosen semantics, deduplicated, in
// canonical order: lexicographic over the per-argument label sequence with
// in < out < undec, arguments in canonical order.
//
// The search backtracks over per-argument label choices and prunes a branch
// as soon as a decided argument's label can no longer become legal.
std::vector<Labelling> enumerate_labellings(const ArgumentationFramework& af, SemanticsKind kind);

inline constexpr std::size_t kDefaultOracleBound = 12;

// Independent testing oracle: materializes all 3^n labellings and filters
// them through is_admissible / is_complete. Shares no search machinery with
// enumerate_labellings. Throws OracleBoundExceeded when af has more than
// `bound` arguments.
std::vector<Labelling> brute_force_labellings(const ArgumentationFramework& af, SemanticsKind kind,
                                              std::size_t bound = kDefaultOracleBound);

// The unique complete labelling with minimal in-set, by least-fixpoint
// iteration: repeatedly label in the arguments all of whose attackers are
// out, label out the targets of in arguments, leave the rest undec.
Labelling grounded_labelling(const ArgumentationFramework& af);

// Labels x receives across all complete labellings. Throws UnknownArgument.
JustificationStatus justification_status(const ArgumentationFramework& af, std::string_view name);

// Statuses for every argument, indexed in canonical order, from a single
// enumeration of the complete labellings.
std::vector<JustificationStatus> justification_map(const ArgumentationFramework& af);

// Same, over an already enumerated complete labelling list.
std::vector<JustificationStatus> justification_map(const ArgumentationFramework& af,
                                                   const std::vector<Labelling>& complete);

} // namespace arglab

#endif
