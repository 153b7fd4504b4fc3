#include "parity_board/abseq.hpp"

#include <cstdlib>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace parity_board {

namespace {

inline Int sign_at(std::size_t one_based) noexcept { return one_based % 2 == 0 ? 1 : -1; }

struct TailSearch {
    Int a;
    Int b;
    std::vector<Int> entries;
    std::vector<ABSequence>& out;

    // entries holds d_1 .. d_{pos-1}; alt is their alternating sum.
    void extend(Int bound, Int remaining, Int alt)
    {
        const std::size_t pos = entries.size() + 1;
        const Int sgn = sign_at(pos);
        for (Int x = std::min(bound, remaining); x >= 1; --x) {
            const Int next_alt = alt + sgn * x;
            const Int left = remaining - x;
            // every later entry moves the sum by at most its own size
            if (std::llabs(next_alt) > left)
                continue;
            entries.push_back(x);
            if (left == 0)
                out.push_back(validate(entries));
            else
                extend(x, left, next_alt);
            entries.pop_back();
        }
    }
};

} // namespace

Int ABSequence::prefix_alt_sum(Int m) const
{
    if (m < 0 || m > length())
        throw Error(Errc::precondition_violated, fmt::format("prefix length {} outside 0..{}", m, length()));
    Int s = 0;
    for (Int i = 1; i <= m; ++i)
        s += sign_at(static_cast<std::size_t>(i)) * entries_[static_cast<std::size_t>(i - 1)];
    return s;
}

ABSequence validate(std::span<const Int> raw)
{
    ABSequence d;
    if (raw.empty())
        return d;
    for (Int x : raw)
        if (x < 1)
            throw Error(Errc::non_positive_entry, fmt::format("entry {} in {}", x, raw));

    const Int a = raw[0] - 1;
    std::size_t b = 1;
    while (b < raw.size() && raw[b] == a + static_cast<Int>(b) + 1)
        ++b;
    for (std::size_t i = b; i < raw.size(); ++i)
        if (raw[i] > raw[i - 1])
            throw Error(Errc::not_weakly_decreasing,
                        fmt::format("{} rises at index {} after the staircase of length {}", raw, i + 1, b));

    Int weight = 0;
    Int alt = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        weight = checked_add(weight, raw[i]);
        alt += sign_at(i + 1) * raw[i];
    }
    if (alt != 0)
        throw Error(Errc::nonzero_alternating_sum, fmt::format("{} has alternating sum {}", raw, alt));

    d.entries_.assign(raw.begin(), raw.end());
    d.a_ = a;
    d.b_ = static_cast<Int>(b);
    d.weight_ = weight;
    return d;
}

std::vector<ABSequence> enumerate_S(Int a, Int b, Int half_weight)
{
    std::vector<ABSequence> out;
    if (a < 0 || b < 1 || half_weight < 0)
        return out;

    TailSearch search{a, b, {}, out};
    Int alt = 0;
    Int used = 0;
    for (Int i = 1; i <= b; ++i) {
        search.entries.push_back(a + i);
        used = checked_add(used, a + i);
        alt += sign_at(static_cast<std::size_t>(i)) * (a + i);
    }
    const Int remaining = checked_mul(2, half_weight) - used;
    if (remaining < 0)
        return out;
    // the staircase alone has alternating sum -(a+1) - (b-1)/2 or b/2, never 0
    if (remaining > 0 && std::llabs(alt) <= remaining)
        search.extend(a + b, remaining, alt);
    return out;
}

bool check_prefix_sign_property(const ABSequence& d)
{
    Int prev = 0;
    for (Int m = 1; m <= d.length(); ++m) {
        const Int cur = prev + sign_at(static_cast<std::size_t>(m)) * d[static_cast<std::size_t>(m)];
        // compares prefix m-1 with prefix m for 0 < m-1 < l
        if (m >= 2 && ((prev > 0 && cur > 0) || (prev < 0 && cur < 0)))
            return false;
        prev = cur;
    }
    return true;
}

bool check_pairing_property(const ABSequence& d, Int n)
{
    if (n < d.b() - 1 || n < 0 || n > d.length() || d.prefix_alt_sum(n) != 0)
        throw Error(Errc::precondition_violated,
                    fmt::format("pairing needs n >= b - 1 with vanishing prefix sum (n = {}, {})", n, to_string(d)));
    const Int l = d.length();
    if ((l - n) % 2 != 0)
        return false;
    for (Int i = n + 1; i < l; i += 2) {
        const auto at = [&](Int j) { return d[static_cast<std::size_t>(j)]; };
        if (at(i) != at(i + 1))
            return false;
        if (i + 2 <= l && at(i + 1) < at(i + 2))
            return false;
    }
    return true;
}

std::string to_string(const ABSequence& d) { return fmt::format("{{{}}}", fmt::join(d.entries(), ",")); }

} // namespace parity_board
