#include "parity_board/partitions.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace parity_board {

namespace {

Int sum_checked(const std::vector<Int>& xs)
{
    Int s = 0;
    for (Int x : xs)
        s = checked_add(s, x);
    return s;
}

void partitions_rec(Int remaining, Int bound, Int step, std::vector<Int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    Int first = std::min(remaining, bound);
    if (step == 2 && first % 2 != 0)
        --first;
    for (Int part = first; part >= step; part -= step) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, step, prefix, out);
        prefix.pop_back();
    }
}

void strict_rec(Int remaining, Int bound, std::optional<Int> parts_left, std::vector<Int>& prefix,
                std::vector<StrictPartition>& out)
{
    if (remaining == 0) {
        if (!parts_left || *parts_left == 0)
            out.emplace_back(prefix);
        return;
    }
    if (parts_left && *parts_left == 0)
        return;
    for (Int part = std::min(remaining, bound); part >= 1; --part) {
        // distinct parts no larger than `part` sum to at most part(part+1)/2
        if (triangular(part) < remaining)
            break;
        if (parts_left) {
            // the remaining parts_left - 1 parts need at least their staircase weight
            if (triangular(*parts_left - 1) > remaining - part)
                continue;
        }
        prefix.push_back(part);
        strict_rec(remaining - part, part - 1, parts_left ? std::optional<Int>(*parts_left - 1) : std::nullopt, prefix,
                   out);
        prefix.pop_back();
    }
}

} // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error(Errc::invalid_partition, fmt::format("non-positive part in {}", parts_));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(Errc::invalid_partition, fmt::format("parts not weakly decreasing in {}", parts_));
    }
    weight_ = sum_checked(parts_);
}

StrictPartition::StrictPartition(std::vector<Int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error(Errc::invalid_partition, fmt::format("non-positive part in {}", parts_));
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw Error(Errc::invalid_partition, fmt::format("parts not strictly decreasing in {}", parts_));
    }
    weight_ = sum_checked(parts_);
}

ColumnSequence::ColumnSequence(std::vector<Int> cols) : cols_(std::move(cols))
{
    if (cols_.empty())
        return;
    if (cols_.front() != 1)
        throw Error(Errc::malformed_columns, fmt::format("first column of {} must have length 1", cols_));
    std::size_t m = 0;
    while (m < cols_.size() && cols_[m] == static_cast<Int>(m + 1))
        ++m;
    for (std::size_t j = m; j < cols_.size(); ++j) {
        if (cols_[j] < 1)
            throw Error(Errc::malformed_columns, fmt::format("non-positive column in {}", cols_));
        if (cols_[j] > cols_[j - 1])
            throw Error(Errc::malformed_columns, fmt::format("tail of {} is not weakly decreasing", cols_));
    }
    staircase_ = static_cast<Int>(m);
}

Int ColumnSequence::alternating_sum() const noexcept
{
    Int s = 0;
    for (std::size_t i = 0; i < cols_.size(); ++i)
        s += (i % 2 == 0) ? -cols_[i] : cols_[i];
    return s;
}

std::vector<Partition> enumerate_partitions(Int n, std::optional<Int> max_part, PartsFilter filter)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<Int> prefix;
    partitions_rec(n, max_part.value_or(n), filter == PartsFilter::even_only ? 2 : 1, prefix, out);
    return out;
}

std::vector<StrictPartition> enumerate_strict_partitions(Int n, std::optional<Int> num_parts)
{
    std::vector<StrictPartition> out;
    if (n < 0 || (num_parts && *num_parts < 0))
        return out;
    std::vector<Int> prefix;
    strict_rec(n, n, num_parts, prefix, out);
    return out;
}

Int partition_count(Int n)
{
    if (n < 0)
        return 0;
    // Partial sums of the recurrence run up to about 2 p(n), so accumulate wider
    // and only require the final value to fit.
    std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (Int i = 1; i <= n; ++i) {
        __int128 acc = 0;
        for (Int k = 1;; ++k) {
            const Int g1 = k * (3 * k - 1) / 2;
            if (g1 > i)
                break;
            const Int g2 = k * (3 * k + 1) / 2;
            __int128 term = p[static_cast<std::size_t>(i - g1)];
            if (g2 <= i)
                term += p[static_cast<std::size_t>(i - g2)];
            acc += (k % 2 == 1) ? term : -term;
        }
        if (acc > std::numeric_limits<Int>::max())
            throw Error(Errc::overflow, fmt::format("p({}) does not fit in 64 bits", i));
        p[static_cast<std::size_t>(i)] = static_cast<Int>(acc);
    }
    return p.back();
}

Int bg_rank(const Partition& p) noexcept
{
    Int r = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] % 2 != 0)
            r += (i % 2 == 0) ? 1 : -1;
    return r;
}

Int bg_rank(const StrictPartition& p) noexcept
{
    Int r = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] % 2 != 0)
            r += (i % 2 == 0) ? 1 : -1;
    return r;
}

ColumnSequence columns(const StrictPartition& s)
{
    // Row i (1-based) of the shifted diagram covers columns i .. i + parts[i] - 1.
    std::vector<Int> cols(static_cast<std::size_t>(s.largest()), 0);
    const auto& parts = s.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i; j < i + static_cast<std::size_t>(parts[i]); ++j)
            ++cols[j];
    return ColumnSequence(std::move(cols));
}

StrictPartition from_columns(const ColumnSequence& c)
{
    const auto& cols = c.cols();
    std::vector<Int> parts;
    for (Int i = 1; i <= c.staircase(); ++i) {
        Int len = 0;
        for (std::size_t j = static_cast<std::size_t>(i - 1); j < cols.size(); ++j)
            if (cols[j] >= i)
                ++len;
        parts.push_back(len);
    }
    return StrictPartition(std::move(parts));
}

StrictPartition from_columns(std::span<const Int> raw)
{
    return from_columns(ColumnSequence(std::vector<Int>(raw.begin(), raw.end())));
}

DurfeeRect durfee_rectangle(const Partition& p, Int a)
{
    // lambda_i - i is strictly decreasing, so the admissible rows form a prefix.
    Int rows = 0;
    while (static_cast<std::size_t>(rows) < p.size() && p.part(static_cast<std::size_t>(rows + 1)) >= rows + 1 + a)
        ++rows;
    return {rows, rows + a};
}

std::string to_string(const Partition& p) { return fmt::format("({})", fmt::join(p.parts(), ",")); }
std::string to_string(const StrictPartition& p) { return fmt::format("({})", fmt::join(p.parts(), ",")); }

} // namespace parity_board
