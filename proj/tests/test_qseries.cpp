#include "doctest.h"
#include "oracles.hpp"
#include "parity_board/abseq.hpp"
#include "parity_board/partitions.hpp"
#include "parity_board/qseries.hpp"

using namespace parity_board;

namespace {

Int strict_with_rank(Int j, Int n)
{
    Int count = 0;
    for (const auto& raw : oracle::all_strict(n))
        if (oracle::bg_rank_by_definition(raw) == j)
            ++count;
    return count;
}

} // namespace

TEST_CASE("series arithmetic")
{
    CHECK(series_reciprocal(TruncatedSeries(3, {1, -1})) == TruncatedSeries(3, {1, 1, 1, 1}));
    CHECK(series_mul(TruncatedSeries(3, {1, -1}), TruncatedSeries(3, {1, 1})) == TruncatedSeries(3, {1, 0, -1}));
    CHECK(series_add(TruncatedSeries(2, {1, 2}), TruncatedSeries(2, {0, -2, 5})) == TruncatedSeries(2, {1, 0, 5}));
    CHECK(series_reciprocal(TruncatedSeries(4, {-1})) == TruncatedSeries(4, {-1}));
    CHECK(TruncatedSeries(4, {1, 2}).shifted(3) == TruncatedSeries(4, {0, 0, 0, 1, 2}));

    CHECK_THROWS_AS(series_reciprocal(TruncatedSeries(3, {2, 1})), Error);
    CHECK_THROWS_AS(series_reciprocal(TruncatedSeries(3)), Error);
    CHECK_THROWS_AS(series_add(TruncatedSeries(3), TruncatedSeries(4)), Error);

    SUBCASE("overflow is a hard error")
    {
        const Int big = Int{1} << 62;
        CHECK_THROWS_AS(series_add(TruncatedSeries(0, {big}), TruncatedSeries(0, {big})), Error);
        CHECK_THROWS_AS(series_mul(TruncatedSeries(1, {big, 1}), TruncatedSeries(1, {4, 1})), Error);
    }

    SUBCASE("reciprocal really inverts")
    {
        const TruncatedSeries s(10, {1, 3, -2, 0, 7, 1});
        CHECK(series_mul(s, series_reciprocal(s)) == TruncatedSeries::one(10));
    }
}

TEST_CASE("pochhammer_q")
{
    CHECK(pochhammer_q(0, 5) == TruncatedSeries::one(5));
    CHECK(pochhammer_q(1, 3) == TruncatedSeries(3, {1, -1}));
    CHECK(pochhammer_q(2, 3) == TruncatedSeries(3, {1, -1, -1, 1}));

    // 1 / (q;q)_k counts partitions into parts <= k
    for (Int k = 0; k <= 5; ++k) {
        const TruncatedSeries r = series_reciprocal(pochhammer_q(k, 20));
        for (Int n = 0; n <= 20; ++n)
            CHECK(r[n] == static_cast<Int>(enumerate_partitions(n, k).size()));
    }
}

TEST_CASE("S_coefficients")
{
    const CoeffTable table = S_coefficients(5, 8, 15);
    CHECK(table.at(0, 3, 6) == 4);
    CHECK(table.at(5, 1, 9) == 3);
    CHECK(table.at(0, 0, 0) == 1);
    for (Int a = 0; a <= 5; ++a)
        for (Int b = 1; b <= 8; ++b)
            CHECK(table.at(a, b, 0) == 0);
    for (Int a = 1; a <= 5; ++a)
        for (Int n = 0; n <= 15; ++n)
            CHECK(table.at(a, 0, n) == 0);

    SUBCASE("coefficients count (a,b)-sequences")
    {
        for (Int a = 0; a <= 4; ++a)
            for (Int b = 1; b <= 8; ++b)
                for (Int n = 0; n <= 15; ++n) {
                    CHECK(table.at(a, b, n) >= 0);
                    CHECK(table.at(a, b, n) == static_cast<Int>(oracle::unpruned_S(a, b, n).size()));
                }
    }

    SUBCASE("summing over b counts partitions with an a-Durfee rectangle")
    {
        for (Int a = 0; a <= 4; ++a)
            for (Int n = 1; n <= 15; ++n) {
                Int total = 0;
                for (Int b = 1; b <= 8; ++b)
                    total += table.at(a, b, n);
                Int expected = 0;
                for (const auto& raw : oracle::all_partitions(n))
                    if (raw.front() > a)
                        ++expected;
                CHECK(total == expected);
            }
    }

    SUBCASE("parallel kernel equals the serial reference")
    {
        CHECK(S_coefficients(4, 8, 15, 4) == S_coefficients_serial(4, 8, 15));
        CHECK(S_coefficients(6, 10, 30, 3) == S_coefficients_serial(6, 10, 30));
        CHECK(S_coefficients(0, 0, 0, 2) == S_coefficients_serial(0, 0, 0));
    }

    CHECK_THROWS_AS(table.at(6, 0, 0), Error);
}

TEST_CASE("q_j_count")
{
    CHECK(q_j_count(-1, 11) == 5);
    CHECK(q_j_count(0, 7) == 0);
    CHECK(q_j_count(1, 7) == 3);
    CHECK(q_j_count(-1, 21) == 30);
    CHECK(q_j_count(3, 23) == 5);
    CHECK(q_j_count(3, 14) == 0);

    CHECK(strict_with_rank(-1, 11) == 5);
    CHECK(strict_with_rank(1, 7) == 3);
    for (Int j = -3; j <= 3; ++j)
        for (Int n = 0; n <= 30; ++n)
            CHECK(q_j_count(j, n) == strict_with_rank(j, n));
}

TEST_CASE("gf_P_j")
{
    CHECK(gf_P_j(0, 8)[4] == 2);
    CHECK(gf_P_j(1, 8)[7] == 3);
    CHECK(gf_P_j(3, 14).is_zero());
    CHECK(gf_P_j(-2, 9).is_zero());

    for (Int j = -3; j <= 3; ++j) {
        const TruncatedSeries g = gf_P_j(j, 30);
        for (Int n = 0; n <= 30; ++n) {
            CHECK(g[n] == strict_with_rank(j, n));
            CHECK(g[n] == q_j_count(j, n));
        }
    }
}
