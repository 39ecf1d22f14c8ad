#include "arglab/enumeration.hpp"

#include "arglab/errors.hpp"

#include <algorithm>

namespace arglab {

std::string_view to_string(SemanticsKind kind) {
    switch (kind) {
        case SemanticsKind::admissible: return "admissible";
        case SemanticsKind::complete: return "complete";
        case SemanticsKind::grounded: return "grounded";
        case SemanticsKind::preferred: return "preferred";
        case SemanticsKind::stable: return "stable";
    }
    return "?";
}

std::optional<SemanticsKind> semantics_from_string(std::string_view name) {
    if (name == "admissible") return SemanticsKind::admissible;
    if (name == "complete") return SemanticsKind::complete;
    if (name == "grounded") return SemanticsKind::grounded;
    if (name == "preferred") return SemanticsKind::preferred;
    if (name == "stable") return SemanticsKind::stable;
    return std::nullopt;
}

std::string JustificationStatus::to_string() const {
    std::string out = "{";
    for (Label l : labels()) {
        if (out.size() > 1) out += ',';
        out += arglab::to_string(l);
    }
    out += '}';
    return out;
}

std::vector<Label> JustificationStatus::labels() const {
    std::vector<Label> out;
    for (Label l : {Label::in, Label::out, Label::undec}) {
        if (contains(l)) out.push_back(l);
    }
    return out;
}

namespace {

constexpr Label kUnassigned = static_cast<Label>(3);

// Backtracking enumerator for admissible / complete labellings.
//
// Arguments are decided in canonical order, labels tried in the in < out <
// undec order, so leaves are reached in canonical labelling order and the
// result needs no sorting. Per-argument counters over the decided attackers
// drive forward pruning: a branch dies as soon as some decided argument's
// label is impossible to legalize no matter how the rest is labelled.
class Search {
public:
    Search(const ArgumentationFramework& af, bool constrain_undec)
        : af_(af),
          constrain_undec_(constrain_undec),
          lab_(af.size(), kUnassigned),
          decided_(af.size(), 0),
          in_(af.size(), 0),
          out_(af.size(), 0) {}

    std::vector<Labelling> run() {
        results_.clear();
        descend(0);
        return std::move(results_);
    }

private:
    // Whether index's current label can still become legal given the
    // decided part of its attacker set.
    bool viable(std::size_t index) const {
        std::size_t total = af_.attackers(index).size();
        switch (lab_[index]) {
            case Label::in:
                // Needs every attacker out; a decided in or undec attacker
                // is fatal.
                return in_[index] == 0 && decided_[index] == out_[index];
            case Label::out:
                // Needs some attacker in; fatal once all attackers are
                // decided without one.
                return in_[index] > 0 || decided_[index] < total;
            case Label::undec:
                if (!constrain_undec_) return true;
                // Needs no attacker in and some attacker not out; fatal on a
                // decided in attacker or once all attackers are out.
                if (in_[index] > 0) return false;
                return !(decided_[index] == total && out_[index] == total);
            default:
                return true;
        }
    }

    void descend(std::size_t depth) {
        if (depth == af_.size()) {
            results_.emplace_back(lab_.begin(), lab_.end());
            return;
        }
        for (Label choice : {Label::in, Label::out, Label::undec}) {
            lab_[depth] = choice;
            for (std::size_t y : af_.targets(depth)) {
                ++decided_[y];
                if (choice == Label::in) ++in_[y];
                if (choice == Label::out) ++out_[y];
            }
            bool ok = viable(depth);
            if (ok) {
                for (std::size_t y : af_.targets(depth)) {
                    if (lab_[y] != kUnassigned && !viable(y)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) descend(depth + 1);
            for (std::size_t y : af_.targets(depth)) {
                --decided_[y];
                if (choice == Label::in) --in_[y];
                if (choice == Label::out) --out_[y];
            }
        }
        lab_[depth] = kUnassigned;
    }

    const ArgumentationFramework& af_;
    bool constrain_undec_;
    std::vector<Label> lab_;
    std::vector<std::size_t> decided_, in_, out_;
    std::vector<Labelling> results_;
};

std::vector<std::size_t> in_set(const Labelling& lab) {
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        if (lab[i] == Label::in) set.push_back(i);
    }
    return set;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Complete labellings whose in-set is maximal under set inclusion.
std::vector<Labelling> maximal_in(const std::vector<Labelling>& complete) {
    std::vector<std::vector<std::size_t>> ins;
    ins.reserve(complete.size());
    for (const Labelling& lab : complete) ins.push_back(in_set(lab));
    std::vector<Labelling> result;
    for (std::size_t i = 0; i < complete.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < complete.size(); ++j) {
            if (j != i && subset(ins[i], ins[j]) && ins[i] != ins[j]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) result.push_back(complete[i]);
    }
    return result;
}

std::vector<Labelling> no_undec(const std::vector<Labelling>& complete) {
    std::vector<Labelling> result;
    for (const Labelling& lab : complete) {
        if (std::find(lab.begin(), lab.end(), Label::undec) == lab.end()) result.push_back(lab);
    }
    return result;
}

// Derived views for the oracle, written against the membership-filtered
// list only, independently of the enumerator's selection helpers.
std::vector<Labelling> oracle_view(const std::vector<Labelling>& kept, SemanticsKind kind) {
    switch (kind) {
        case SemanticsKind::admissible:
        case SemanticsKind::complete:
            return kept;
        case SemanticsKind::grounded: {
            // The complete labelling whose in-set is contained in all others.
            std::vector<Labelling> result;
            for (const Labelling& lab : kept) {
                std::vector<std::size_t> mine = in_set(lab);
                bool least = true;
                for (const Labelling& other : kept) {
                    if (!subset(mine, in_set(other))) {
                        least = false;
                        break;
                    }
                }
                if (least) result.push_back(lab);
            }
            return result;
        }
        case SemanticsKind::preferred: {
            std::vector<Labelling> result;
            for (const Labelling& lab : kept) {
                std::vector<std::size_t> mine = in_set(lab);
                bool strictly_below = false;
                for (const Labelling& other : kept) {
                    std::vector<std::size_t> theirs = in_set(other);
                    if (subset(mine, theirs) && mine != theirs) {
                        strictly_below = true;
                        break;
                    }
                }
                if (!strictly_below) result.push_back(lab);
            }
            return result;
        }
        case SemanticsKind::stable: {
            std::vector<Labelling> result;
            for (const Labelling& lab : kept) {
                if (std::find(lab.begin(), lab.end(), Label::undec) == lab.end()) {
                    result.push_back(lab);
                }
            }
            return result;
        }
    }
    return {};
}

} // namespace

std::vector<Labelling> enumerate_labellings(const ArgumentationFramework& af, SemanticsKind kind) {
    switch (kind) {
        case SemanticsKind::admissible: return Search(af, false).run();
        case SemanticsKind::complete: return Search(af, true).run();
        case SemanticsKind::grounded: return {grounded_labelling(af)};
        case SemanticsKind::preferred: return maximal_in(Search(af, true).run());
        case SemanticsKind::stable: return no_undec(Search(af, true).run());
    }
    return {};
}

std::vector<Labelling> brute_force_labellings(const ArgumentationFramework& af, SemanticsKind kind,
                                              std::size_t bound) {
    const std::size_t n = af.size();
    if (n > bound) throw OracleBoundExceeded(n, bound);

    // Odometer over all 3^n label sequences, most significant digit first,
    // so candidates come out in canonical order.
    std::vector<Labelling> kept;
    Labelling lab(n, Label::in);
    bool complete_based = kind != SemanticsKind::admissible;
    while (true) {
        bool member = complete_based ? is_complete(af, lab) : is_admissible(af, lab);
        if (member) kept.push_back(lab);
        bool advanced = false;
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (lab[pos] != Label::undec) {
                lab[pos] = static_cast<Label>(static_cast<unsigned char>(lab[pos]) + 1);
                advanced = true;
                break;
            }
            lab[pos] = Label::in;
        }
        if (!advanced) break;
    }
    return oracle_view(kept, kind);
}

Labelling grounded_labelling(const ArgumentationFramework& af) {
    const std::size_t n = af.size();
    Labelling lab(n, kUnassigned);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (lab[x] != kUnassigned) continue;
            bool all_out = true;
            for (std::size_t b : af.attackers(x)) {
                if (lab[b] != Label::out) {
                    all_out = false;
                    break;
                }
            }
            if (!all_out) continue;
            lab[x] = Label::in;
            changed = true;
            for (std::size_t y : af.targets(x)) {
                if (lab[y] == kUnassigned) lab[y] = Label::out;
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (lab[x] == kUnassigned) lab[x] = Label::undec;
    }
    return lab;
}

JustificationStatus justification_status(const ArgumentationFramework& af, std::string_view name) {
    return justification_map(af)[af.index_of(name)];
}

std::vector<JustificationStatus> justification_map(const ArgumentationFramework& af) {
    return justification_map(af, enumerate_labellings(af, SemanticsKind::complete));
}

std::vector<JustificationStatus> justification_map(const ArgumentationFramework& af,
                                                   const std::vector<Labelling>& complete) {
    std::vector<JustificationStatus> statuses(af.size());
    for (const Labelling& lab : complete) {
        if (lab.size() != af.size()) throw PartialLabelling(lab.size(), af.size());
        for (std::size_t i = 0; i < af.size(); ++i) statuses[i].add(lab[i]);
    }
    return statuses;
}

} // namespace arglab
