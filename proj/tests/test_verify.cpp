#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "parity_board/abseq.hpp"
#include "parity_board/qseries.hpp"
#include "parity_board/tables.hpp"
#include "parity_board/verify.hpp"

using namespace parity_board;

namespace {

std::string render(const VerificationReport& r, Format fmt = Format::tsv)
{
    std::ostringstream os;
    write_report(os, r, fmt);
    return os.str();
}

std::string table(TableKind kind, const TableParams& p, Format fmt = Format::tsv)
{
    std::ostringstream os;
    emit_table(os, kind, p, fmt);
    return os.str();
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("verification sweeps pass on small grids")
{
    CHECK(verify_bijection_phi(2, 3, 8).passed());
    CHECK(verify_gf(2, 4, 10).passed());
    CHECK(verify_iota(12).passed());
    CHECK(verify_theorem34(-2, 2, 5, 18).passed());
    CHECK(verify_euler_vandervelde(20).passed());
    CHECK(verify_congruences(60).passed());
}

TEST_CASE("degenerate grids")
{
    const auto vacuous = verify_bijection_phi(0, 0, 0);
    CHECK(vacuous.passed());
    CHECK(vacuous.checks_run == 0);

    const auto single = verify_bijection_phi(0, 1, 1);
    CHECK(single.passed());
    // one sequence {1,1}: weight, membership, round trip, board, plus count cells n = 0, 1
    CHECK(single.checks_run == 6);

    const auto empty = verify_iota(0);
    CHECK(empty.passed());
    CHECK(empty.checks_run > 0);

    const auto euler0 = verify_euler_vandervelde(0);
    CHECK(euler0.passed());
    CHECK(euler0.checks_run == 1);
}

TEST_CASE("congruence sweep records skipped cells")
{
    const auto r = verify_congruences(101);
    CHECK(r.passed());
    CHECK(r.skipped > 0);
    CHECK(congruence_families().size() == 6);
}

TEST_CASE("reports do not depend on the job count")
{
    CHECK(render(verify_bijection_phi(3, 4, 10, 1)) == render(verify_bijection_phi(3, 4, 10, 4)));
    CHECK(render(verify_gf(3, 6, 12, 1)) == render(verify_gf(3, 6, 12, 3)));
    CHECK(render(verify_iota(16, 1)) == render(verify_iota(16, 4)));
    CHECK(render(verify_theorem34(-2, 2, 6, 20, 1)) == render(verify_theorem34(-2, 2, 6, 20, 2)));
    CHECK(render(verify_euler_vandervelde(30, 1)) == render(verify_euler_vandervelde(30, 4)));
    CHECK(render(verify_congruences(101, 1), Format::json_lines) ==
          render(verify_congruences(101, 4), Format::json_lines));
}

TEST_CASE("report serialization")
{
    VerificationReport r;
    r.subject = "demo";
    r.parameter_grid = {{"n_max", 3}};
    r.check(true, "a", "1", "1");
    r.check(false, "b", "2", "3");

    CHECK(render(r) == "# demo\tn_max=3\nchecks_run\t2\nskipped\t0\nmismatches\t1\n"
                       "mismatch\tb\texpected=2\tactual=3\nstatus\tfail\n");

    const auto recs = lines(render(r, Format::json_lines));
    REQUIRE(recs.size() == 3);
    const auto header = nlohmann::json::parse(recs[0]);
    CHECK(header["subject"] == "demo");
    CHECK(header["grid"]["n_max"] == 3);
    CHECK(nlohmann::json::parse(recs[1])["mismatch"]["actual"] == "3");
    const auto summary = nlohmann::json::parse(recs[2]);
    CHECK(summary["status"] == "fail");
    CHECK(summary["checks_run"] == 2);
}

TEST_CASE("tables")
{
    SUBCASE("table1")
    {
        TableParams p;
        p.n = 7;
        const auto rows = lines(table(TableKind::table1, p));
        REQUIRE(rows.size() == 7);
        CHECK(rows[1] == "partition\tt\tdelta");
        CHECK(rows[2] == "7\t1\t{1,1,1,1,1,1}");
        CHECK(rows[3] == "6+1\t3\t{1,1,1,1}");
        CHECK(rows[4] == "5+2\t1\t{2,2,1,1}");
        CHECK(rows[5] == "4+3\t3\t{2,2}");
        CHECK(rows[6] == "4+2+1\t1\t{2,3,1}");
    }
    SUBCASE("counts at zero is a single row")
    {
        TableParams p;
        p.n = 0;
        const auto rows = lines(table(TableKind::counts, p));
        REQUIRE(rows.size() == 3);
        CHECK(rows[2] == "0\t1\t1\t1");
    }
    SUBCASE("s-coeffs in json-lines")
    {
        TableParams p;
        p.a_max = 2;
        p.b_max = 4;
        p.trunc = 10;
        const auto recs = lines(table(TableKind::s_coeffs, p, Format::json_lines));
        REQUIRE(recs.size() == 1 + 3 * 5 * 11);
        for (std::size_t i = 1; i < recs.size(); ++i) {
            const auto rec = nlohmann::json::parse(recs[i]);
            const Int a = rec["a"], b = rec["b"], n = rec["n"], coeff = rec["coeff"];
            const Int expected = b == 0 ? (a == 0 && n == 0 ? 1 : 0) : static_cast<Int>(enumerate_S(a, b, n).size());
            CHECK(coeff == expected);
        }
    }
    SUBCASE("byte-stable")
    {
        TableParams p;
        p.k_min = -1;
        p.k_max = 1;
        p.m_max = 4;
        p.n_max = 15;
        CHECK(table(TableKind::theorem34, p) == table(TableKind::theorem34, p));
        CHECK(parse_table_kind("theorem34") == TableKind::theorem34);
        CHECK_FALSE(parse_table_kind("table2").has_value());
    }
}
