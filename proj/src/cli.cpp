#include "bowtie/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bowtie/characterize.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/graph.hpp"
#include "bowtie/realizer.hpp"
#include "bowtie/sequence.hpp"
#include "bowtie/verify.hpp"

namespace bowtie::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

std::string verdict_line(const CheckReport& r) {
    if (r.potentially) return "potentially: yes";
    switch (r.failure) {
    case Failure::NotGraphic: return "potentially: no (not graphic)";
    case Failure::TooShort: return "potentially: no (fewer than 5 terms)";
    case Failure::Cond1: return "potentially: no (condition 1)";
    case Failure::Cond2: return "potentially: no (condition 2)";
    case Failure::Cond3: return "potentially: no (condition 3)";
    case Failure::Cond4:
        return "potentially: no (condition 4, k=" + std::to_string(r.cond4->k) + ", i=" + std::to_string(r.cond4->i) +
               ")";
    case Failure::Cond5: return "potentially: no (condition 5)";
    case Failure::Cond6: return "potentially: no (condition 6)";
    case Failure::None: break;
    }
    return "potentially: no";
}

void write_check_structured(std::ostream& out, const DegreeSequence& seq, const CheckReport& r) {
    out << "sequence=" << format_sequence(seq) << '\n'
        << "n=" << seq.size() << '\n'
        << "sum=" << sigma(seq) << '\n'
        << "graphic=" << true_false(r.graphic) << '\n'
        << "potentially=" << true_false(r.potentially) << '\n'
        << "failure=" << failure_name(r.failure) << '\n';
    if (r.cond4) out << "k=" << r.cond4->k << '\n' << "i=" << r.cond4->i << '\n';
}

std::string witness_text(const BowtieWitness& w) {
    std::ostringstream s;
    s << "center=" << w.center << " wings=" << w.wing1.first << '-' << w.wing1.second << ',' << w.wing2.first << '-'
      << w.wing2.second;
    return s.str();
}

std::string route_name(Route r) {
    switch (r) {
    case Route::Oracle: return "oracle";
    case Route::Family: return "family";
    case Route::Recursion: return "recursion";
    }
    return "unknown";
}

int cmd_check(const std::string& text, OutputMode mode, std::ostream& out) {
    const auto seq = parse_sequence(text);
    const auto report = check_potentially(seq);
    if (mode == OutputMode::Structured) {
        out << "command=check\n";
        write_check_structured(out, seq, report);
    } else {
        out << "sequence: " << format_sequence(seq) << '\n'
            << "graphic: " << yes_no(report.graphic) << '\n'
            << verdict_line(report) << '\n';
    }
    return report.potentially ? kAccept : kReject;
}

int cmd_realize(const std::string& text, OutputMode mode, std::ostream& out, std::ostream& err) {
    const auto seq = parse_sequence(text);
    const auto report = check_potentially(seq);
    if (!report.potentially) {
        if (mode == OutputMode::Structured) {
            out << "command=realize\n";
            write_check_structured(out, seq, report);
        } else if (mode == OutputMode::Text) {
            out << "sequence: " << format_sequence(seq) << '\n' << verdict_line(report) << '\n';
        } else {
            err << format_sequence(seq) << ": " << verdict_line(report) << '\n';
        }
        return kReject;
    }

    const auto result = realize_with_bowtie_traced(seq);
    const auto& g = result.graph;
    switch (mode) {
    case OutputMode::Edges:
        out << "# bowtie " << witness_text(result.witness) << '\n';
        write_edge_list(out, g);
        break;
    case OutputMode::Dot:
        out << "// bowtie " << witness_text(result.witness) << '\n';
        write_dot(out, g);
        break;
    case OutputMode::Structured: {
        out << "command=realize\n";
        write_check_structured(out, seq, report);
        out << "vertices=" << g.vertex_count() << '\n'
            << "edge_count=" << g.edge_count() << '\n'
            << "route=" << route_name(result.route) << '\n'
            << "depth=" << result.depth << '\n'
            << "family=" << (result.family ? family_name(result.family->id) : "none") << '\n'
            << "bowtie_center=" << result.witness.center << '\n'
            << "bowtie_wing1=" << result.witness.wing1.first << '-' << result.witness.wing1.second << '\n'
            << "bowtie_wing2=" << result.witness.wing2.first << '-' << result.witness.wing2.second << '\n'
            << "edges=";
        bool first = true;
        for (const auto& [u, v] : g.edges()) {
            out << (first ? "" : ";") << u << '-' << v;
            first = false;
        }
        out << '\n';
        break;
    }
    case OutputMode::Text:
        out << "sequence: " << format_sequence(seq) << '\n'
            << "potentially: yes\n"
            << "vertices: " << g.vertex_count() << '\n'
            << "edges: " << g.edge_count() << '\n'
            << "# bowtie " << witness_text(result.witness) << '\n';
        write_edge_list(out, g);
        break;
    }
    return kAccept;
}

int cmd_verify(int n, OutputMode mode, std::ostream& out) {
    const auto summary = verify_characterization(n);
    if (mode == OutputMode::Structured) {
        out << "command=verify\n"
            << "n=" << summary.n << '\n'
            << "sequences_tested=" << summary.sequences_tested << '\n'
            << "potentially_count=" << summary.potentially_count << '\n'
            << "mismatches=" << summary.mismatches.size() << '\n';
        for (const auto& m : summary.mismatches) {
            out << "mismatch=" << format_sequence(m.sequence) << " checker=" << true_false(m.checker)
                << " oracle=" << true_false(m.oracle) << '\n';
        }
    } else {
        out << "n: " << summary.n << '\n'
            << "sequences_tested: " << summary.sequences_tested << '\n'
            << "potentially_count: " << summary.potentially_count << '\n'
            << "mismatches: " << summary.mismatches.size() << '\n';
        for (const auto& m : summary.mismatches) {
            out << "mismatch: " << format_sequence(m.sequence) << " checker=" << yes_no(m.checker)
                << " oracle=" << yes_no(m.oracle) << '\n';
        }
    }
    return summary.mismatches.empty() ? kAccept : kFalsified;
}

int cmd_sigma(int n, OutputMode mode, std::ostream& out) {
    const auto report = sigma_empirical(n);
    const auto closed = sigma_closed_form(n);
    const bool agree = report.bound == closed;
    if (mode == OutputMode::Structured) {
        out << "command=sigma\n"
            << "n=" << report.n << '\n'
            << "empirical=" << report.bound << '\n'
            << "closed_form=" << closed << '\n'
            << "agree=" << true_false(agree) << '\n'
            << "witness=" << format_sequence(report.witness) << '\n'
            << "witness_sum=" << sigma(report.witness) << '\n'
            << "oracle_confirmed=" << true_false(report.oracle_confirmed) << '\n';
    } else {
        out << "n: " << report.n << '\n'
            << "empirical: " << report.bound << ", closed-form: " << closed << ", agree: " << yes_no(agree) << '\n'
            << "witness: " << format_sequence(report.witness) << " (sum " << sigma(report.witness) << ")\n"
            << "oracle-confirmed: " << yes_no(report.oracle_confirmed) << '\n';
    }
    return agree && report.oracle_confirmed ? kAccept : kFalsified;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Potentially (K5 - C4)-graphic sequences: check, realize, verify, sigma"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputMode mode = OutputMode::Text;
    const std::map<std::string, OutputMode> modes{{"text", OutputMode::Text},
                                                  {"structured", OutputMode::Structured},
                                                  {"dot", OutputMode::Dot},
                                                  {"edges", OutputMode::Edges}};
    std::string mode_name = "text";
    app.add_option("--output", mode_name, "Output format: text, structured, dot or edges")
        ->check(CLI::IsMember({"text", "structured", "dot", "edges"}, CLI::ignore_case));

    std::string seq_text;
    int n = 0;
    auto* check = app.add_subcommand("check", "Decide whether SEQ is potentially (K5 - C4)-graphic");
    check->add_option("SEQ", seq_text, "Degree sequence, e.g. 4^2,3^2,2")->required();
    auto* realize = app.add_subcommand("realize", "Print a realization of SEQ containing K5 - C4");
    realize->add_option("SEQ", seq_text, "Degree sequence")->required();
    auto* verify = app.add_subcommand("verify", "Compare the checker with brute force on all length-N sequences");
    verify->add_option("N", n, "Sequence length, 5..8")->required();
    auto* sigma_cmd = app.add_subcommand("sigma", "Compute sigma(K5 - C4, N) empirically");
    sigma_cmd->add_option("N", n, "Sequence length, 5..8")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kAccept;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    mode = modes.at(CLI::detail::to_lower(mode_name));
    const bool graph_mode = mode == OutputMode::Dot || mode == OutputMode::Edges;
    if (graph_mode && !realize->parsed()) {
        err << "error: --output dot/edges only applies to realize\n";
        return kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(seq_text, mode, out);
        if (realize->parsed()) return cmd_realize(seq_text, mode, out, err);
        if (verify->parsed()) return cmd_verify(n, mode, out);
        if (sigma_cmd->parsed()) return cmd_sigma(n, mode, out);
    } catch (const InternalExhaustion& e) {
        err << "falsification alarm: " << e.what() << '\n';
        return kFalsified;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace bowtie::cli
