#include "parity_board/bijections.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace parity_board {

namespace {

// Block B_i of the board, as 1-based (row, col) cells in filling order.
// Odd i = 2j-1: row j, columns 1 .. a+j, left to right.
// Even i = 2j: column a+j+1, rows 1 .. j, top to bottom.
std::vector<std::pair<Int, Int>> block_cells(Int a, Int i)
{
    std::vector<std::pair<Int, Int>> cells;
    if (i % 2 == 1) {
        const Int j = (i + 1) / 2;
        for (Int col = 1; col <= a + j; ++col)
            cells.emplace_back(j, col);
    } else {
        const Int j = i / 2;
        for (Int row = 1; row <= j; ++row)
            cells.emplace_back(row, a + j + 1);
    }
    return cells;
}

// Number of cells of the diagram of p inside block B_i.
Int cells_in_block(const Partition& p, Int a, Int i)
{
    if (i % 2 == 1) {
        const Int j = (i + 1) / 2;
        return std::min(p.part(static_cast<std::size_t>(j)), a + j);
    }
    const Int j = i / 2;
    Int count = 0;
    for (Int row = 1; row <= j; ++row)
        if (p.part(static_cast<std::size_t>(row)) >= a + j + 1)
            ++count;
    return count;
}

} // namespace

Partition phi(Int a, const ABSequence& d)
{
    if (d.is_empty())
        throw Error(Errc::invalid_sequence, "phi is defined on nonempty (a,b)-sequences only");
    if (d.a() != a)
        throw Error(Errc::invalid_sequence, fmt::format("{} has a = {}, expected {}", to_string(d), d.a(), a));

    const auto l = static_cast<std::size_t>(d.length());
    std::vector<Int> c(l + 1, 0);
    c[1] = d[1];
    for (std::size_t i = 2; i <= l; ++i)
        c[i] = d[i] - c[i - 1];
    if (c[l] != 0)
        throw Error(Errc::internal_invariant_violation, "last block count of a zero-sum sequence must vanish");

    std::vector<Int> parts;
    for (std::size_t j = 1; 2 * j - 1 <= l; ++j) {
        Int len = c[2 * j - 1];
        for (std::size_t i = j; 2 * i <= l; ++i)
            if (c[2 * i] >= static_cast<Int>(j))
                ++len;
        parts.push_back(len);
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

ABSequence phi_inverse(Int a, const Partition& p)
{
    if (p.largest() <= a)
        throw Error(Errc::not_in_pab, fmt::format("{} has no {}-Durfee rectangle", to_string(p), a));

    // Odd blocks reach row size(p); even blocks reach column largest(p).
    const Int max_block = std::max<Int>(2 * static_cast<Int>(p.size()) - 1, 2 * (p.largest() - a - 1));
    std::vector<Int> c(static_cast<std::size_t>(max_block) + 1, 0);
    Int last = 0;
    for (Int i = 1; i <= max_block; ++i) {
        c[static_cast<std::size_t>(i)] = cells_in_block(p, a, i);
        if (c[static_cast<std::size_t>(i)] > 0)
            last = i;
    }

    std::vector<Int> raw;
    raw.push_back(c[1]);
    for (Int i = 2; i <= last + 1; ++i) {
        const Int cur = i <= max_block ? c[static_cast<std::size_t>(i)] : 0;
        raw.push_back(c[static_cast<std::size_t>(i - 1)] + cur);
    }
    try {
        ABSequence d = validate(raw);
        if (d.a() != a)
            throw Error(Errc::not_in_pab, fmt::format("{} read back with a = {}", to_string(p), d.a()));
        return d;
    } catch (const Error& e) {
        if (e.code() == Errc::not_in_pab)
            throw;
        throw Error(Errc::not_in_pab, fmt::format("{} does not read back as a sequence: {}", to_string(p), e.what()));
    }
}

bool in_P_ab(const Partition& p, Int a, Int b)
{
    if (a < 0 || b < 1)
        return false;
    const Int half = (b + 1) / 2;
    if (durfee_rectangle(p, a).rows != half)
        return false;
    const Int row = p.part(static_cast<std::size_t>(half));
    return b % 2 == 0 ? row > a + half : row == a + half;
}

std::optional<Partition> phi_by_board_simulation(Int a, const ABSequence& d)
{
    if (d.is_empty() || d.a() != a)
        return std::nullopt;

    std::map<std::pair<Int, Int>, int> cover;
    std::vector<std::pair<Int, Int>> single_prev; // singly covered cells of B_{i-1}

    for (Int i = 1; i <= d.length(); ++i) {
        Int budget = d[static_cast<std::size_t>(i)];
        if (budget < static_cast<Int>(single_prev.size()))
            return std::nullopt;
        for (const auto& cell : single_prev)
            cover[cell] = 2;
        budget -= static_cast<Int>(single_prev.size());

        const auto block = block_cells(a, i);
        if (budget > static_cast<Int>(block.size()))
            return std::nullopt;
        single_prev.assign(block.begin(), block.begin() + budget);
        for (const auto& cell : single_prev) {
            if (cover[cell] != 0)
                return std::nullopt;
            cover[cell] = 1;
        }
    }

    std::map<Int, std::vector<Int>> rows;
    for (const auto& [cell, count] : cover) {
        if (count == 1)
            return std::nullopt;
        if (count == 2)
            rows[cell.first].push_back(cell.second);
    }

    std::vector<Int> parts;
    Int expected_row = 1;
    for (const auto& [row, cols] : rows) {
        if (row != expected_row++)
            return std::nullopt;
        // std::map iteration already sorted the columns of each row
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (cols[k] != static_cast<Int>(k) + 1)
                return std::nullopt;
        if (!parts.empty() && static_cast<Int>(cols.size()) > parts.back())
            return std::nullopt;
        parts.push_back(static_cast<Int>(cols.size()));
    }
    return Partition(std::move(parts));
}

IotaImage iota(const StrictPartition& s)
{
    const ColumnSequence c = columns(s);
    const Int alt = c.alternating_sum();
    // Prefix sums start 0, -1, 1, -2, 2, ...; the full sum occurs first at k.
    const Int k = alt >= 0 ? 2 * alt : -2 * alt - 1;
    const Int m = static_cast<Int>(s.num_parts());
    if (k > m)
        throw Error(Errc::internal_invariant_violation,
                    fmt::format("staircase height {} exceeds {} parts of {}", k, m, to_string(s)));
    const auto& cols = c.cols();
    try {
        return IotaImage::from_height(k, validate(std::span<const Int>(cols).subspan(static_cast<std::size_t>(k))));
    } catch (const Error& e) {
        throw Error(Errc::internal_invariant_violation,
                    fmt::format("column suffix of {} is not an (a,b)-sequence: {}", to_string(s), e.what()));
    }
}

bool iota_image_check(const IotaImage& img)
{
    if (img.k < 0 || img.t != triangular(img.k))
        return false;
    const ABSequence& d = img.delta;
    return d.is_empty() || d.a() == img.k || (d.a() <= img.k - 1 && d.b() == 1);
}

StrictPartition iota_inverse(const IotaImage& img)
{
    if (!iota_image_check(img))
        throw Error(Errc::not_in_image,
                    fmt::format("({}, {}) is not the image of a strict partition", img.t, to_string(img.delta)));
    std::vector<Int> cols;
    for (Int i = 1; i <= img.k; ++i)
        cols.push_back(i);
    cols.insert(cols.end(), img.delta.entries().begin(), img.delta.entries().end());
    return from_columns(cols);
}

Int count_strict_by_parts_rank(Int k, Int m, Int n)
{
    Int count = 0;
    for (const auto& s : enumerate_strict_partitions(n, m))
        if (bg_rank(s) == k)
            ++count;
    return count;
}

Int theorem34_rhs(Int k, Int m, Int n)
{
    const bool in_range = (k > 0 && m >= 2 * k - 1) || (k <= 0 && m >= -2 * k);
    if (!in_range || m < 0 || n < triangular(m))
        return 0;
    const Int rest = n - k * (2 * k - 1);
    if (rest < 0 || rest % 2 != 0)
        return 0;
    const Int half = rest / 2;

    if (k > 0) {
        if (m > 2 * k - 1)
            return static_cast<Int>(enumerate_S(2 * k - 1, m - 2 * k + 1, half).size());
        return static_cast<Int>(enumerate_partitions(half, 2 * k - 1).size());
    }
    if (m > -2 * k)
        return static_cast<Int>(enumerate_S(-2 * k, m + 2 * k, half).size());
    return static_cast<Int>(enumerate_partitions(half, -2 * k).size());
}

} // namespace parity_board
