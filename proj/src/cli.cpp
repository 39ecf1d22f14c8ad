#include "arglab/cli.hpp"

#include "arglab/af.hpp"
#include "arglab/enumeration.hpp"
#include "arglab/errors.hpp"
#include "arglab/semantics.hpp"
#include "arglab/statements.hpp"
#include "arglab/taxonomy.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arglab::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    // Semantics and scheme stay as their CLI spellings until after flag
    // validation; the maps below convert them.
    std::string semantics_name = "complete";
    std::string scheme_name;
    SemanticsKind semantics = SemanticsKind::complete;
    Scheme scheme = Scheme::bivalent;
    std::string af_path;
    std::string claims_path;
    std::vector<std::string> queries;
    std::string format = "text";
    bool oracle_check = false;
};

// The kebab-case spellings used on the command line and echoed in reports.
const std::map<std::string, SemanticsKind> kSemanticsNames{
    {"admissible", SemanticsKind::admissible}, {"complete", SemanticsKind::complete},
    {"grounded", SemanticsKind::grounded},     {"preferred", SemanticsKind::preferred},
    {"stable", SemanticsKind::stable},
};

const std::map<std::string, Scheme> kSchemeNames{
    {"bivalent", Scheme::bivalent},
    {"doubt-tolerant", Scheme::doubt_tolerant},
    {"ignorance-aware", Scheme::ignorance_aware},
    {"engagement-aware", Scheme::engagement_aware},
};

std::string cli_name(SemanticsKind kind) {
    for (const auto& [name, k] : kSemanticsNames)
        if (k == kind) return name;
    return "?";
}

std::string cli_name(Scheme scheme) {
    for (const auto& [name, s] : kSchemeNames)
        if (s == scheme) return name;
    return "?";
}

template <typename T>
std::vector<std::string> keys(const std::map<std::string, T>& names) {
    std::vector<std::string> out;
    for (const auto& [name, value] : names) out.push_back(name);
    return out;
}

// Input errors are reported as "error: <path>[:<line>]: <message>"; line 0
// means the error is not tied to a line.
[[noreturn]] void fail_input(const std::string& path, int line, const std::string& message) {
    if (line > 0) throw Error(path + ":" + std::to_string(line) + ": " + message);
    throw Error(path + ": " + message);
}

ArgumentationFramework load_af(const std::string& path) {
    try {
        return parse_af_file(path);
    } catch (const SyntaxError& e) {
        fail_input(path, e.line, e.what());
    } catch (const DuplicateArgument& e) {
        fail_input(path, e.line, e.what());
    } catch (const UndeclaredArgument& e) {
        fail_input(path, e.line, e.what());
    }
}

ClaimMap load_claims(const std::string& path) {
    try {
        return parse_claims_file(path);
    } catch (const SyntaxError& e) {
        fail_input(path, e.line, e.what());
    } catch (const ConflictingContrary& e) {
        fail_input(path, 0, e.what());
    } catch (const DuplicateConclusion& e) {
        fail_input(path, 0, e.what());
    }
}

ordered_json labelling_json(const ArgumentationFramework& af, const Labelling& lab) {
    ordered_json sets{{"in", ordered_json::array()},
                      {"out", ordered_json::array()},
                      {"undec", ordered_json::array()}};
    for (std::size_t i = 0; i < af.size(); ++i) {
        sets[std::string(to_string(lab[i]))].push_back(af.name(i));
    }
    return sets;
}

ordered_json status_json(const JustificationStatus& status) {
    ordered_json labels = ordered_json::array();
    for (Label l : status.labels()) labels.push_back(std::string(to_string(l)));
    return labels;
}

// Raised on an --oracle-check mismatch; carries the diagnostic only.
struct OracleMismatch {
    std::string detail;
};

ordered_json run_enumerate(const RunConfig& config) {
    ArgumentationFramework af = load_af(config.af_path);
    std::vector<Labelling> labellings = enumerate_labellings(af, config.semantics);
    if (config.oracle_check) {
        std::vector<Labelling> expected = brute_force_labellings(af, config.semantics);
        if (labellings != expected) {
            throw OracleMismatch{"enumerate " + cli_name(config.semantics) + " on "
                                 + config.af_path + ": " + std::to_string(labellings.size())
                                 + " labellings, oracle found " + std::to_string(expected.size())};
        }
    }
    ordered_json report;
    report["subcommand"] = "enumerate";
    report["semantics"] = cli_name(config.semantics);
    report["labellings"] = ordered_json::array();
    for (const Labelling& lab : labellings) report["labellings"].push_back(labelling_json(af, lab));
    return report;
}

ordered_json run_justify(const RunConfig& config) {
    ArgumentationFramework af = load_af(config.af_path);
    std::vector<JustificationStatus> statuses = justification_map(af);
    if (config.oracle_check) {
        std::vector<JustificationStatus> expected =
            justification_map(af, brute_force_labellings(af, SemanticsKind::complete));
        for (std::size_t i = 0; i < af.size(); ++i) {
            if (statuses[i] != expected[i]) {
                throw OracleMismatch{"justify on " + config.af_path + ": " + af.name(i) + " is "
                                     + statuses[i].to_string() + ", oracle says "
                                     + expected[i].to_string()};
            }
        }
    }
    ordered_json report;
    report["subcommand"] = "justify";
    report["arguments"] = ordered_json::array();
    for (std::size_t i = 0; i < af.size(); ++i) {
        ordered_json entry;
        entry["name"] = af.name(i);
        entry["status"] = status_json(statuses[i]);
        entry["class"] = std::string(to_string(classify_status(statuses[i])));
        report["arguments"].push_back(entry);
    }
    return report;
}

ordered_json statement_json(const std::string& statement, const StatementVerdict& verdict) {
    ordered_json entry;
    entry["statement"] = statement;
    entry["label"] = std::string(to_string(verdict.label));
    if (std::optional<IndecisionForm> form = indecision_form_of(verdict.label)) {
        entry["form"] = std::string(to_string(*form));
        entry["rank"] = engagement_rank(*form);
    }
    if (verdict.conflict) entry["conflict"] = true;
    return entry;
}

ordered_json run_statements(const RunConfig& config) {
    ArgumentationFramework af = load_af(config.af_path);
    ClaimMap cm = load_claims(config.claims_path);
    std::vector<JustificationStatus> statuses = justification_map(af);
    if (config.oracle_check) {
        std::vector<JustificationStatus> expected =
            justification_map(af, brute_force_labellings(af, SemanticsKind::complete));
        if (statuses != expected) {
            throw OracleMismatch{"statements on " + config.af_path
                                 + ": justification statuses disagree with the oracle"};
        }
    }

    ordered_json report;
    report["subcommand"] = "statements";
    report["scheme"] = cli_name(config.scheme);
    report["statements"] = ordered_json::array();
    if (config.queries.empty()) {
        for (const std::string& s : cm.vocabulary()) {
            report["statements"].push_back(
                statement_json(s, label_statement(af, cm, s, config.scheme, statuses)));
        }
    } else {
        // Queries are answered in the order given.
        for (const std::string& s : config.queries) {
            report["statements"].push_back(
                statement_json(s, label_statement(af, cm, s, config.scheme, statuses)));
        }
    }
    return report;
}

std::string join(const ordered_json& names) {
    std::string joined;
    for (const auto& name : names) {
        if (!joined.empty()) joined += ",";
        joined += name.get<std::string>();
    }
    return joined;
}

void emit(const RunConfig& config, const ordered_json& report, std::ostream& out) {
    if (config.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        out << render_text(report);
    }
}

} // namespace

std::string render_text(const ordered_json& report) {
    std::ostringstream out;
    const std::string subcommand = report.at("subcommand").get<std::string>();
    if (subcommand == "enumerate") {
        for (const auto& lab : report.at("labellings")) {
            out << "{{" << join(lab.at("in")) << "},{" << join(lab.at("out")) << "},{"
                << join(lab.at("undec")) << "}}\n";
        }
    } else if (subcommand == "justify") {
        for (const auto& entry : report.at("arguments")) {
            out << entry.at("name").get<std::string>() << " {" << join(entry.at("status")) << "} "
                << entry.at("class").get<std::string>() << "\n";
        }
    } else if (subcommand == "statements") {
        for (const auto& entry : report.at("statements")) {
            out << entry.at("statement").get<std::string>() << " "
                << entry.at("label").get<std::string>();
            if (entry.contains("form")) {
                out << " " << entry.at("form").get<std::string>() << " "
                    << entry.at("rank").get<int>();
            }
            if (entry.contains("conflict") && entry.at("conflict").get<bool>()) out << " conflict";
            out << "\n";
        }
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Labelling-based evaluation of abstract argumentation frameworks", "arglab"};
    app.require_subcommand(1);

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "List all labellings under a semantics");
    enumerate_cmd->add_option("--semantics", config.semantics_name, "Semantics to enumerate")
        ->check(CLI::IsMember(keys(kSemanticsNames)))
        ->capture_default_str();
    enumerate_cmd->add_option("af", config.af_path, "Argumentation framework file")->required();

    CLI::App* justify_cmd =
        app.add_subcommand("justify", "Justification status and acceptance class per argument");
    justify_cmd->add_option("af", config.af_path, "Argumentation framework file")->required();

    CLI::App* statements_cmd =
        app.add_subcommand("statements", "Label the claim map's statements");
    statements_cmd->add_option("--scheme", config.scheme_name, "Statement labelling scheme")
        ->check(CLI::IsMember(keys(kSchemeNames)))
        ->required();
    statements_cmd->add_option("--claims", config.claims_path, "Claim map file")->required();
    statements_cmd->add_option("--query", config.queries, "Report only these statements");
    statements_cmd->add_option("af", config.af_path, "Argumentation framework file")->required();

    for (CLI::App* cmd : {enumerate_cmd, justify_cmd, statements_cmd}) {
        cmd->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_flag("--oracle-check", config.oracle_check,
                      "Re-verify results against the brute-force oracle");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0 through CLI11; everything else is a usage
        // error.
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    config.semantics = kSemanticsNames.at(config.semantics_name);
    if (!config.scheme_name.empty()) config.scheme = kSchemeNames.at(config.scheme_name);

    try {
        ordered_json report;
        if (enumerate_cmd->parsed()) {
            report = run_enumerate(config);
        } else if (justify_cmd->parsed()) {
            report = run_justify(config);
        } else {
            report = run_statements(config);
        }
        emit(config, report, out);
        return 0;
    } catch (const OracleMismatch& e) {
        err << "error: oracle check failed: " << e.detail << "\n";
        return 3;
    } catch (const OracleBoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace arglab::cli
