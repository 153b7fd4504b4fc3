#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parity_board/partitions.hpp"

using namespace parity_board;

namespace {

std::vector<std::vector<Int>> parts_of(const std::vector<Partition>& ps)
{
    std::vector<std::vector<Int>> out;
    for (const auto& p : ps)
        out.push_back(p.parts());
    return out;
}

std::vector<std::vector<Int>> parts_of(const std::vector<StrictPartition>& ps)
{
    std::vector<std::vector<Int>> out;
    for (const auto& p : ps)
        out.push_back(p.parts());
    return out;
}

} // namespace

TEST_CASE("partition types reject malformed part lists")
{
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({3, 0}), Error);
    CHECK_NOTHROW(Partition({3, 3, 1}));
    CHECK_THROWS_AS(StrictPartition({3, 3, 1}), Error);
    CHECK(Partition({4, 2, 2}).weight() == 8);
    CHECK(Partition().weight() == 0);
    CHECK(StrictPartition({7, 4, 3, 1}).num_parts() == 4);
}

TEST_CASE("enumerate_partitions")
{
    SUBCASE("bounded largest part, reverse lexicographic")
    {
        const std::vector<std::vector<Int>> expected = {{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
        CHECK(parts_of(enumerate_partitions(5, 3)) == expected);
    }
    SUBCASE("empty partition of zero")
    {
        const auto ps = enumerate_partitions(0);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].empty());
    }
    SUBCASE("even parts only")
    {
        const std::vector<std::vector<Int>> expected = {{6}, {4, 2}, {2, 2, 2}};
        CHECK(parts_of(enumerate_partitions(6, std::nullopt, PartsFilter::even_only)) == expected);
        CHECK(enumerate_partitions(7, std::nullopt, PartsFilter::even_only).empty());
    }
    SUBCASE("agrees with the brute-force lister as sets")
    {
        for (Int n = 0; n <= 15; ++n) {
            auto got = parts_of(enumerate_partitions(n));
            auto want = oracle::all_partitions(n);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
    SUBCASE("order is strictly descending")
    {
        const auto ps = parts_of(enumerate_partitions(12));
        CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
        CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    }
}

TEST_CASE("enumerate_strict_partitions")
{
    const std::vector<std::vector<Int>> seven = {{7}, {6, 1}, {5, 2}, {4, 3}, {4, 2, 1}};
    CHECK(parts_of(enumerate_strict_partitions(7)) == seven);
    CHECK(enumerate_strict_partitions(0).size() == 1);

    std::vector<std::vector<Int>> rank3;
    for (const auto& s : enumerate_strict_partitions(33, 6))
        if (bg_rank(s) == 3)
            rank3.push_back(s.parts());
    const std::vector<std::vector<Int>> expected = {{13, 6, 5, 4, 3, 2}, {11, 8, 5, 4, 3, 2}, {9, 8, 7, 4, 3, 2}};
    CHECK(rank3 == expected);

    for (Int n = 0; n <= 20; ++n) {
        auto want = oracle::all_strict(n);
        std::size_t by_parts = 0;
        for (Int m = 0; m <= 7; ++m)
            by_parts += enumerate_strict_partitions(n, m).size();
        CHECK(enumerate_strict_partitions(n).size() == want.size());
        CHECK(by_parts == want.size());
    }
}

TEST_CASE("partition_count")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(9) == 30);
    CHECK(partition_count(-3) == 0);
    for (Int n = 0; n <= 30; ++n)
        CHECK(partition_count(n) == static_cast<Int>(enumerate_partitions(n).size()));
    // p(405) is the largest value below 2^63 (checked with an arbitrary-precision CAS)
    CHECK(partition_count(405) == 9147679068859117602);
    CHECK_THROWS_AS(partition_count(406), Error);
}

TEST_CASE("bg_rank")
{
    CHECK(bg_rank(StrictPartition({13, 6, 5, 4, 3, 2})) == 3);
    CHECK(bg_rank(Partition()) == 0);
    CHECK(bg_rank(StrictPartition({7, 4, 3, 1})) == 1);
    CHECK(bg_rank(StrictPartition({10, 1})) == -1);

    // Chessboard weight of the ordinary diagram, for every partition.
    for (Int n = 0; n <= 14; ++n)
        for (const auto& p : oracle::all_partitions(n))
            CHECK(bg_rank(Partition(p)) == oracle::chessboard(p));
}

TEST_CASE("columns and from_columns")
{
    CHECK(columns(StrictPartition({7, 4, 3, 1})).cols() == std::vector<Int>{1, 2, 3, 4, 3, 1, 1});
    CHECK(columns(StrictPartition({1})).cols() == std::vector<Int>{1});
    CHECK(columns(StrictPartition({4, 2, 1})).cols() == std::vector<Int>{1, 2, 3, 1});
    CHECK(columns(StrictPartition()).cols().empty());

    const std::vector<Int> c7431{1, 2, 3, 4, 3, 1, 1};
    CHECK(from_columns(c7431) == StrictPartition({7, 4, 3, 1}));
    CHECK(from_columns(std::vector<Int>{1}) == StrictPartition({1}));
    CHECK(from_columns(std::vector<Int>{1, 2, 2, 1}) == StrictPartition({4, 2}));
    CHECK(from_columns(std::vector<Int>{}) == StrictPartition());

    SUBCASE("malformed diagrams are rejected")
    {
        for (const std::vector<Int>& bad : {std::vector<Int>{2}, {1, 2, 3, 4, 5, 6, 1, 2}, {1, 1, 2}, {1, 3}, {1, 2, 0}})
            CHECK_THROWS_AS(from_columns(bad), Error);
    }

    SUBCASE("round trip, chessboard identity and staircase structure")
    {
        for (Int n = 0; n <= 25; ++n) {
            for (const auto& s : enumerate_strict_partitions(n)) {
                const ColumnSequence c = columns(s);
                CHECK(from_columns(c) == s);
                CHECK(c.cols() == oracle::shifted_columns(s.parts()));
                CHECK(bg_rank(s) == -c.alternating_sum());
                const auto m = static_cast<Int>(s.num_parts());
                CHECK(c.staircase() == m);
                for (Int i = 1; i <= m; ++i)
                    CHECK(c.cols()[static_cast<std::size_t>(i - 1)] == i);
                for (std::size_t j = static_cast<std::size_t>(m); j < c.size(); ++j)
                    CHECK(c.cols()[j] <= c.cols()[j - 1]);
            }
        }
    }

    SUBCASE("random strict partitions with larger parts")
    {
        std::mt19937_64 rng(20161017);
        for (int trial = 0; trial < 300; ++trial) {
            const auto raw = oracle::random_strict(rng, 40);
            const StrictPartition s(raw);
            CHECK(from_columns(columns(s)) == s);
            CHECK(bg_rank(s) == oracle::chessboard(raw));
        }
    }
}

TEST_CASE("durfee_rectangle")
{
    const Partition lambda({12, 10, 9, 6, 4, 3, 1});
    CHECK(durfee_rectangle(lambda, 6) == DurfeeRect{3, 9});
    CHECK(durfee_rectangle(Partition({7, 4, 3, 1}), 0) == DurfeeRect{3, 3});
    const auto none = durfee_rectangle(Partition(), 2);
    CHECK_FALSE(none.present());
    CHECK(none.rows == 0);
    CHECK_FALSE(durfee_rectangle(Partition({2, 2, 1}), 2).present());

    // rows is weakly decreasing in a; brute-force rectangle fitting
    for (Int n = 0; n <= 12; ++n) {
        for (const auto& raw : oracle::all_partitions(n)) {
            const Partition p(raw);
            Int prev = durfee_rectangle(p, 0).rows;
            for (Int a = 0; a <= 6; ++a) {
                const Int rows = durfee_rectangle(p, a).rows;
                Int fit = 0;
                for (Int i = 1; i <= static_cast<Int>(raw.size()); ++i) {
                    bool ok = true;
                    for (Int r = 0; r < i; ++r)
                        ok = ok && raw[static_cast<std::size_t>(r)] >= i + a;
                    if (ok)
                        fit = i;
                }
                CHECK(rows == fit);
                CHECK(rows <= prev);
                prev = rows;
            }
        }
    }
}
