#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arglab/af.hpp"
#include "arglab/enumeration.hpp"
#include "arglab/errors.hpp"
#include "arglab/semantics.hpp"
#include "test_helpers.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace arglab;

namespace {

AF six_af() {
    return parse_af(
        "arg(A). arg(B). arg(C). arg(D). arg(E). arg(F).\n"
        "att(A,C). att(C,D). att(D,A). att(E,F). att(F,E).\n");
}

// Directed cycle c0 -> c1 -> ... -> c{n-1} -> c0 (a self-attack for n = 1).
AF cycle_af(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> attacks;
    for (std::size_t i = 0; i < n; ++i) attacks.emplace_back(names[i], names[(i + 1) % n]);
    return AF::make(names, attacks);
}

std::vector<std::string> in_set(const AF& af, const Labelling& lab) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < af.size(); ++i)
        if (lab[i] == Label::in) names.push_back(af.name(i));
    return names;
}

constexpr SemanticsKind kAllKinds[] = {SemanticsKind::admissible, SemanticsKind::complete,
                                       SemanticsKind::grounded, SemanticsKind::preferred,
                                       SemanticsKind::stable};

} // namespace

TEST_CASE("the running framework has six admissible and three complete labellings") {
    AF af = six_af();

    std::vector<Labelling> complete = enumerate_labellings(af, SemanticsKind::complete);
    REQUIRE(complete.size() == 3);
    CHECK(format_labelling(af, complete[0]) == "{{B,E},{F},{A,C,D}}");
    CHECK(format_labelling(af, complete[1]) == "{{B,F},{E},{A,C,D}}");
    CHECK(format_labelling(af, complete[2]) == "{{B},{},{A,C,D,E,F}}");

    std::vector<Labelling> admissible = enumerate_labellings(af, SemanticsKind::admissible);
    REQUIRE(admissible.size() == 6);
    for (const Labelling& lab : complete)
        CHECK(std::find(admissible.begin(), admissible.end(), lab) != admissible.end());
    CHECK(format_labelling(af, admissible[3]) == "{{E},{F},{A,B,C,D}}");
    CHECK(format_labelling(af, admissible[4]) == "{{F},{E},{A,B,C,D}}");
    CHECK(format_labelling(af, admissible[5]) == "{{},{},{A,B,C,D,E,F}}");

    std::vector<Labelling> preferred = enumerate_labellings(af, SemanticsKind::preferred);
    REQUIRE(preferred.size() == 2);
    CHECK(in_set(af, preferred[0]) == std::vector<std::string>{"B", "E"});
    CHECK(in_set(af, preferred[1]) == std::vector<std::string>{"B", "F"});

    // the odd cycle keeps A, C, D undec everywhere, so nothing is stable
    CHECK(enumerate_labellings(af, SemanticsKind::stable).empty());

    std::vector<Labelling> grounded = enumerate_labellings(af, SemanticsKind::grounded);
    REQUIRE(grounded.size() == 1);
    CHECK(format_labelling(af, grounded[0]) == "{{B},{},{A,C,D,E,F}}");
}

TEST_CASE("a chain resolves to a single complete labelling") {
    AF af = parse_af("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
    std::vector<Labelling> complete = enumerate_labellings(af, SemanticsKind::complete);
    REQUIRE(complete.size() == 1);
    CHECK(format_labelling(af, complete[0]) == "{{a,c},{b},{}}");
    // that labelling is simultaneously grounded, preferred and stable
    for (SemanticsKind kind : {SemanticsKind::grounded, SemanticsKind::preferred,
                               SemanticsKind::stable}) {
        CHECK(enumerate_labellings(af, kind) == complete);
    }
}

TEST_CASE("the empty framework has exactly the empty labelling under every semantics") {
    AF af;
    for (SemanticsKind kind : kAllKinds) {
        CAPTURE(to_string(kind));
        CHECK(enumerate_labellings(af, kind) == std::vector<Labelling>{{}});
    }
    CHECK(justification_map(af).empty());
}

TEST_CASE("grounded_labelling computes the least fixpoint directly") {
    CHECK(grounded_labelling(six_af())
          == make_labelling(six_af(), {{"B", Label::in}}));
    AF chain = parse_af("arg(a). arg(b). arg(c). att(a,b). att(b,c).");
    CHECK(grounded_labelling(chain)
          == make_labelling(chain, {{"a", Label::in}, {"b", Label::out}, {"c", Label::in}}));
    AF twocycle = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    CHECK(grounded_labelling(twocycle) == make_labelling(twocycle, {}));
    CHECK(grounded_labelling(AF()).empty());
}

TEST_CASE("brute force agrees with hand-computed small cases") {
    AF one = parse_af("arg(a).");
    CHECK(brute_force_labellings(one, SemanticsKind::complete)
          == std::vector<Labelling>{{Label::in}});
    CHECK(brute_force_labellings(one, SemanticsKind::admissible)
          == std::vector<Labelling>{{Label::in}, {Label::undec}});

    AF twocycle = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    std::vector<Labelling> complete = brute_force_labellings(twocycle, SemanticsKind::complete);
    REQUIRE(complete.size() == 3);
    CHECK(complete[0] == Labelling{Label::in, Label::out});
    CHECK(complete[1] == Labelling{Label::out, Label::in});
    CHECK(complete[2] == Labelling{Label::undec, Label::undec});
    CHECK(brute_force_labellings(twocycle, SemanticsKind::stable)
          == std::vector<Labelling>{{Label::in, Label::out}, {Label::out, Label::in}});
    CHECK(brute_force_labellings(twocycle, SemanticsKind::grounded)
          == std::vector<Labelling>{{Label::undec, Label::undec}});
}

TEST_CASE("the brute-force oracle enforces its size bound") {
    std::vector<std::string> names;
    for (int i = 0; i < 13; ++i) names.push_back("x" + std::to_string(i));
    AF af = AF::make(names, {});
    CHECK_THROWS_AS(brute_force_labellings(af, SemanticsKind::complete), OracleBoundExceeded);
    try {
        brute_force_labellings(af, SemanticsKind::complete, 4);
        FAIL("expected OracleBoundExceeded");
    } catch (const OracleBoundExceeded& e) {
        CHECK(e.n == 13);
        CHECK(e.bound == 4);
    }
    // right at the custom bound it still runs
    AF small = parse_af("arg(a). arg(b). att(a,b).");
    CHECK(brute_force_labellings(small, SemanticsKind::complete, 2).size() == 1);
}

TEST_CASE("justification statuses of the running framework") {
    AF af = six_af();
    CHECK(justification_status(af, "A") == JustificationStatus::of({Label::undec}));
    CHECK(justification_status(af, "B") == JustificationStatus::of({Label::in}));
    CHECK(justification_status(af, "C") == JustificationStatus::of({Label::undec}));
    CHECK(justification_status(af, "D") == JustificationStatus::of({Label::undec}));
    CHECK(justification_status(af, "E")
          == JustificationStatus::of({Label::in, Label::out, Label::undec}));
    CHECK(justification_status(af, "F")
          == JustificationStatus::of({Label::in, Label::out, Label::undec}));
    CHECK_THROWS_AS(justification_status(af, "nope"), UnknownArgument);
}

TEST_CASE("justification statuses of simple shapes") {
    AF chain = parse_af("arg(a). arg(b). att(a,b).");
    CHECK(justification_status(chain, "a") == JustificationStatus::of({Label::in}));
    CHECK(justification_status(chain, "b") == JustificationStatus::of({Label::out}));

    AF twocycle = parse_af("arg(a). arg(b). att(a,b). att(b,a).");
    CHECK(justification_status(twocycle, "a")
          == JustificationStatus::of({Label::in, Label::out, Label::undec}));

    // x is attacked by both sides of a two-cycle, so it is out whenever the
    // cycle resolves and undec otherwise; its target y mirrors that as
    // {in,undec}.
    AF guarded = parse_af(
        "arg(b). arg(c). arg(x). arg(y).\n"
        "att(b,c). att(c,b). att(b,x). att(c,x). att(x,y).\n");
    CHECK(justification_status(guarded, "x")
          == JustificationStatus::of({Label::out, Label::undec}));
    CHECK(justification_status(guarded, "y")
          == JustificationStatus::of({Label::in, Label::undec}));
}

TEST_CASE("JustificationStatus prints and orders its labels canonically") {
    CHECK(JustificationStatus::of({Label::undec, Label::in}).to_string() == "{in,undec}");
    CHECK(JustificationStatus::of({Label::in}).to_string() == "{in}");
    CHECK(JustificationStatus::of({Label::in, Label::out, Label::undec}).to_string()
          == "{in,out,undec}");
    CHECK(JustificationStatus().empty());
    CHECK(JustificationStatus::of({Label::out, Label::undec}).labels()
          == std::vector<Label>{Label::out, Label::undec});
    CHECK(JustificationStatus::of({Label::in}).count() == 1);
}

TEST_CASE("semantics names round-trip through their string forms") {
    for (SemanticsKind kind : kAllKinds) {
        CHECK(semantics_from_string(to_string(kind)) == kind);
    }
    CHECK_FALSE(semantics_from_string("unheard-of").has_value());
}

TEST_CASE("cycle parity: odd cycles abstain, even cycles stay open") {
    for (std::size_t n = 1; n <= 9; ++n) {
        AF af = cycle_af(n);
        std::vector<JustificationStatus> statuses = justification_map(af);
        JustificationStatus expected =
            n % 2 == 1 ? JustificationStatus::of({Label::undec})
                       : JustificationStatus::of({Label::in, Label::out, Label::undec});
        for (std::size_t x = 0; x < af.size(); ++x) {
            CAPTURE(n);
            CAPTURE(x);
            CHECK(statuses[x] == expected);
        }
    }
}

TEST_CASE("property: search and brute force agree on every semantics") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 120; ++trial) {
        AF af = testing::random_af(rng, 7, 0.25);
        CAPTURE(af.to_apx());
        for (SemanticsKind kind : kAllKinds) {
            CAPTURE(to_string(kind));
            CHECK(enumerate_labellings(af, kind) == brute_force_labellings(af, kind));
        }
    }
}

TEST_CASE("property: enumeration output is strictly increasing in canonical order") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 120; ++trial) {
        AF af = testing::random_af(rng, 7, 0.25);
        for (SemanticsKind kind : kAllKinds) {
            std::vector<Labelling> result = enumerate_labellings(af, kind);
            CHECK(std::is_sorted(result.begin(), result.end()));
            CHECK(std::adjacent_find(result.begin(), result.end()) == result.end());
        }
    }
}

TEST_CASE("property: every status is nonempty and abstention rules out {in,out}") {
    std::mt19937 rng(7003);
    const JustificationStatus in_out = JustificationStatus::of({Label::in, Label::out});
    for (int trial = 0; trial < 150; ++trial) {
        AF af = testing::random_af(rng, 7, 0.25);
        for (const JustificationStatus& status : justification_map(af)) {
            CHECK_FALSE(status.empty());
            CHECK(status != in_out);
        }
    }
}

TEST_CASE("property: {undec} means neither in nor out anywhere admissible") {
    std::mt19937 rng(7004);
    for (int trial = 0; trial < 100; ++trial) {
        AF af = testing::random_af(rng, 6, 0.25);
        std::vector<Labelling> admissible = brute_force_labellings(af, SemanticsKind::admissible);
        std::vector<JustificationStatus> statuses = justification_map(af);
        for (std::size_t x = 0; x < af.size(); ++x) {
            bool ever_committed = std::any_of(
                admissible.begin(), admissible.end(),
                [&](const Labelling& lab) { return lab[x] != Label::undec; });
            CHECK((statuses[x] == JustificationStatus::of({Label::undec})) == !ever_committed);
        }
    }
}

TEST_CASE("property: {in,out,undec} is exactly credulous in plus credulous out") {
    std::mt19937 rng(7005);
    for (int trial = 0; trial < 100; ++trial) {
        AF af = testing::random_af(rng, 6, 0.25);
        std::vector<JustificationStatus> statuses = justification_map(af);
        for (std::size_t x = 0; x < af.size(); ++x) {
            bool both = statuses[x].contains(Label::in) && statuses[x].contains(Label::out);
            CHECK((statuses[x] == JustificationStatus::of({Label::in, Label::out, Label::undec}))
                  == both);
        }
    }
}

TEST_CASE("property: the grounded labelling is the complete one with least in-set") {
    std::mt19937 rng(7006);
    for (int trial = 0; trial < 100; ++trial) {
        AF af = testing::random_af(rng, 7, 0.25);
        Labelling grounded = grounded_labelling(af);
        std::vector<Labelling> complete = enumerate_labellings(af, SemanticsKind::complete);
        CHECK(std::find(complete.begin(), complete.end(), grounded) != complete.end());
        for (const Labelling& lab : complete) {
            for (std::size_t x = 0; x < af.size(); ++x) {
                if (grounded[x] == Label::in) CHECK(lab[x] == Label::in);
            }
        }
        CHECK(enumerate_labellings(af, SemanticsKind::grounded).size() == 1);
    }
}

TEST_CASE("property: stable labellings are preferred and complete ones admissible") {
    std::mt19937 rng(7007);
    for (int trial = 0; trial < 100; ++trial) {
        AF af = testing::random_af(rng, 7, 0.25);
        std::vector<Labelling> admissible = enumerate_labellings(af, SemanticsKind::admissible);
        std::vector<Labelling> complete = enumerate_labellings(af, SemanticsKind::complete);
        std::vector<Labelling> preferred = enumerate_labellings(af, SemanticsKind::preferred);
        std::vector<Labelling> stable = enumerate_labellings(af, SemanticsKind::stable);
        for (const Labelling& lab : complete)
            CHECK(std::find(admissible.begin(), admissible.end(), lab) != admissible.end());
        for (const Labelling& lab : preferred)
            CHECK(std::find(complete.begin(), complete.end(), lab) != complete.end());
        for (const Labelling& lab : stable) {
            CHECK(std::find(preferred.begin(), preferred.end(), lab) != preferred.end());
            CHECK(std::none_of(lab.begin(), lab.end(),
                               [](Label l) { return l == Label::undec; }));
        }
    }
}
