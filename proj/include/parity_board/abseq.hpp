#ifndef PARITY_BOARD_ABSEQ_HPP
#define PARITY_BOARD_ABSEQ_HPP

#include <span>
#include <string>
#include <vector>

#include "parity_board/error.hpp"

namespace parity_board {

/// A validated (a,b)-sequence: d_i = a + i for i <= b, weakly decreasing from
/// d_b on, alternating sum zero. Only validate() builds one, so the derived
/// fields always agree with the entries. The default value is the empty
/// sequence, with every derived field 0.
class ABSequence {
public:
    ABSequence() = default;

    static ABSequence empty() { return {}; }

    const std::vector<Int>& entries() const noexcept { return entries_; }
    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    Int length() const noexcept { return static_cast<Int>(entries_.size()); }
    Int weight() const noexcept { return weight_; }
    Int alt_sum() const noexcept { return 0; }
    bool is_empty() const noexcept { return entries_.empty(); }
    /// 1-based.
    Int operator[](std::size_t i) const { return entries_[i - 1]; }

    /// Sum_{i<=m} (-1)^i d_i for 0 <= m <= length.
    Int prefix_alt_sum(Int m) const;

    friend bool operator==(const ABSequence&, const ABSequence&) = default;
    friend auto operator<=>(const ABSequence& x, const ABSequence& y) { return x.entries_ <=> y.entries_; }

private:
    friend ABSequence validate(std::span<const Int> raw);

    std::vector<Int> entries_;
    Int a_ = 0;
    Int b_ = 0;
    Int weight_ = 0;
};

/// Derives a = d_1 - 1 and b as the maximal initial run d_i = a + i, then
/// checks the tail and the alternating sum. The empty list yields the empty
/// sequence. Throws Error with non_positive_entry, not_weakly_decreasing or
/// nonzero_alternating_sum.
ABSequence validate(std::span<const Int> raw);
inline ABSequence validate(std::initializer_list<Int> raw) { return validate(std::span<const Int>(raw.begin(), raw.size())); }

/// All members of S_{a,b} of weight 2 * half_weight, tails in descending
/// lexicographic order. Requires a >= 0, b >= 1.
std::vector<ABSequence> enumerate_S(Int a, Int b, Int half_weight);

/// No 0 < m < l has consecutive prefix alternating sums of the same strict sign.
bool check_prefix_sign_property(const ABSequence& d);

/// For n >= b - 1 with a vanishing n-th prefix alternating sum: n and l share
/// parity and the entries after n come in equal, weakly decreasing pairs.
/// Throws Error(precondition_violated) when the precondition fails.
bool check_pairing_property(const ABSequence& d, Int n);

std::string to_string(const ABSequence& d);

} // namespace parity_board

#endif // PARITY_BOARD_ABSEQ_HPP
