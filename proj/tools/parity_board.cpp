// parity-board: exact verification harness for (a,b)-sequences, the board
// bijection, the strict-partition injection and their counting corollaries.
//
// Exit codes: 0 all checks pass, 1 at least one mismatch, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "parity_board/abseq.hpp"
#include "parity_board/partitions.hpp"
#include "parity_board/tables.hpp"
#include "parity_board/verify.hpp"

using namespace parity_board;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Common {
    std::string format = "tsv";
    std::string out;
    int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json-lines"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
    cmd->add_option("--jobs", c.jobs, "OpenMP worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

Format to_format(const std::string& s) { return s == "json-lines" ? Format::json_lines : Format::tsv; }

// Runs `emit` against stdout or the --out file.
int with_output(const Common& c, const std::function<int(std::ostream&)>& emit)
{
    if (c.out.empty())
        return emit(std::cout);
    std::ofstream file(c.out);
    if (!file) {
        std::cerr << "error: cannot open " << c.out << " for writing\n";
        return exit_usage;
    }
    return emit(file);
}

int run_verify(const Common& c, const std::function<VerificationReport()>& sweep)
{
    const VerificationReport report = sweep();
    std::cerr << fmt::format("{}: {} checks, {} skipped, {} mismatches in {:.3f}s\n", report.subject,
                             report.checks_run, report.skipped, report.mismatches.size(), report.elapsed.count());
    return with_output(c, [&](std::ostream& os) {
        write_report(os, report, to_format(c.format));
        return report.passed() ? exit_pass : exit_mismatch;
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for (a,b)-sequences, board fillings and strict partitions by BG-rank"};
    app.name("parity-board");
    app.require_subcommand(1);

    std::function<int()> action;

    // enumerate --------------------------------------------------------------
    Common enum_common;
    std::string enum_kind;
    Int enum_n = 0;
    std::optional<Int> enum_max_part;
    std::optional<Int> enum_parts;
    bool enum_even = false;
    Int enum_a = 0;
    Int enum_b = 1;
    auto* enumerate = app.add_subcommand("enumerate", "List partitions, strict partitions or (a,b)-sequences");
    add_common(enumerate, enum_common);
    enumerate->add_option("kind", enum_kind, "partitions | strict | abseq")
        ->required()
        ->check(CLI::IsMember({"partitions", "strict", "abseq"}));
    enumerate->add_option("--n", enum_n, "Weight (half weight for abseq)")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--max-part", enum_max_part, "Largest allowed part")->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--even", enum_even, "Even parts only");
    enumerate->add_option("--parts", enum_parts, "Exact number of parts (strict)")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--a", enum_a, "a for abseq")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--b", enum_b, "b for abseq")->check(CLI::PositiveNumber);
    enumerate->callback([&] {
        action = [&] {
            return with_output(enum_common, [&](std::ostream& os) {
                const bool json = to_format(enum_common.format) == Format::json_lines;
                auto emit = [&](const std::vector<Int>& entries) {
                    if (json)
                        os << fmt::format("[{}]\n", fmt::join(entries, ","));
                    else
                        os << fmt::format("{}\n", fmt::join(entries, "\t"));
                };
                if (enum_kind == "partitions") {
                    for (const auto& p : enumerate_partitions(
                             enum_n, enum_max_part, enum_even ? PartsFilter::even_only : PartsFilter::any))
                        emit(p.parts());
                } else if (enum_kind == "strict") {
                    for (const auto& s : enumerate_strict_partitions(enum_n, enum_parts))
                        emit(s.parts());
                } else {
                    for (const auto& d : enumerate_S(enum_a, enum_b, enum_n))
                        emit(d.entries());
                }
                return exit_pass;
            });
        };
    });

    // verify-phi -------------------------------------------------------------
    Common phi_common;
    Int phi_a = 3, phi_b = 4, phi_n = 12;
    auto* vphi = app.add_subcommand("verify-phi", "Check the board bijection S_{a,b} -> P_{a,b}");
    add_common(vphi, phi_common);
    vphi->add_option("--a-max", phi_a)->check(CLI::NonNegativeNumber)->capture_default_str();
    vphi->add_option("--b-max", phi_b)->check(CLI::NonNegativeNumber)->capture_default_str();
    vphi->add_option("--n-max", phi_n)->check(CLI::NonNegativeNumber)->capture_default_str();
    vphi->callback([&] {
        action = [&] { return run_verify(phi_common, [&] { return verify_bijection_phi(phi_a, phi_b, phi_n, phi_common.jobs); }); };
    });

    // verify-gf --------------------------------------------------------------
    Common gf_common;
    Int gf_a = 4, gf_b = 8, gf_trunc = 15;
    auto* vgf = app.add_subcommand("verify-gf", "Check series coefficients against enumerated (a,b)-sequences");
    add_common(vgf, gf_common);
    vgf->add_option("--a-max", gf_a)->check(CLI::NonNegativeNumber)->capture_default_str();
    vgf->add_option("--b-max", gf_b)->check(CLI::NonNegativeNumber)->capture_default_str();
    vgf->add_option("--trunc", gf_trunc)->check(CLI::NonNegativeNumber)->capture_default_str();
    vgf->callback([&] {
        action = [&] { return run_verify(gf_common, [&] { return verify_gf(gf_a, gf_b, gf_trunc, gf_common.jobs); }); };
    });

    // verify-iota ------------------------------------------------------------
    Common iota_common;
    Int iota_n = 25;
    auto* viota = app.add_subcommand("verify-iota", "Check the injection of strict partitions into (t, Delta) pairs");
    add_common(viota, iota_common);
    viota->add_option("--n-max", iota_n)->check(CLI::NonNegativeNumber)->capture_default_str();
    viota->callback([&] {
        action = [&] { return run_verify(iota_common, [&] { return verify_iota(iota_n, iota_common.jobs); }); };
    });

    // verify-thm34 -----------------------------------------------------------
    Common t34_common;
    Int t34_kmin = -3, t34_kmax = 3, t34_m = 8, t34_n = 30;
    auto* vt34 = app.add_subcommand("verify-thm34", "Count strict partitions by parts and BG-rank two ways");
    add_common(vt34, t34_common);
    vt34->add_option("--k-min", t34_kmin)->capture_default_str();
    vt34->add_option("--k-max", t34_kmax)->capture_default_str();
    vt34->add_option("--m-max", t34_m)->check(CLI::PositiveNumber)->capture_default_str();
    vt34->add_option("--n-max", t34_n)->check(CLI::NonNegativeNumber)->capture_default_str();
    vt34->callback([&] {
        if (t34_kmin > t34_kmax)
            throw CLI::ValidationError("--k-min", "must not exceed --k-max");
        action = [&] {
            return run_verify(t34_common,
                              [&] { return verify_theorem34(t34_kmin, t34_kmax, t34_m, t34_n, t34_common.jobs); });
        };
    });

    // verify-euler -----------------------------------------------------------
    Common euler_common;
    Int euler_n = 40;
    auto* veuler = app.add_subcommand("verify-euler", "Strict partitions vs. even parts plus one triangular part");
    add_common(veuler, euler_common);
    veuler->add_option("--n-max", euler_n)->check(CLI::NonNegativeNumber)->capture_default_str();
    veuler->callback([&] {
        action = [&] {
            return run_verify(euler_common, [&] { return verify_euler_vandervelde(euler_n, euler_common.jobs); });
        };
    });

    // verify-congruences -----------------------------------------------------
    Common cong_common;
    Int cong_n = 101;
    auto* vcong = app.add_subcommand("verify-congruences", "Mod-5 congruences for strict partitions by BG-rank");
    add_common(vcong, cong_common);
    vcong->add_option("--n-max", cong_n)->check(CLI::NonNegativeNumber)->capture_default_str();
    vcong->callback([&] {
        action = [&] { return run_verify(cong_common, [&] { return verify_congruences(cong_n, cong_common.jobs); }); };
    });

    // table ------------------------------------------------------------------
    Common table_common;
    std::string table_kind;
    TableParams tp;
    auto* table = app.add_subcommand("table", "Emit a table: table1 | s-coeffs | theorem34 | counts");
    add_common(table, table_common);
    table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"table1", "s-coeffs", "theorem34", "counts"}));
    table->add_option("--n", tp.n, "Weight for table1 / counts")->check(CLI::NonNegativeNumber)->capture_default_str();
    table->add_option("--a-max", tp.a_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    table->add_option("--b-max", tp.b_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    table->add_option("--trunc", tp.trunc)->check(CLI::NonNegativeNumber)->capture_default_str();
    table->add_option("--k-min", tp.k_min)->capture_default_str();
    table->add_option("--k-max", tp.k_max)->capture_default_str();
    table->add_option("--m-max", tp.m_max)->check(CLI::PositiveNumber)->capture_default_str();
    table->add_option("--n-max", tp.n_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    table->callback([&] {
        action = [&] {
            return with_output(table_common, [&](std::ostream& os) {
                emit_table(os, *parse_table_kind(table_kind), tp, to_format(table_common.format));
                return exit_pass;
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
