#ifndef PARITY_BOARD_ERROR_HPP
#define PARITY_BOARD_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parity_board {

/// Every exact count and part in the library is a signed 64-bit integer.
using Int = std::int64_t;

enum class Errc {
    overflow,
    invalid_partition,
    malformed_columns,
    non_positive_entry,
    not_weakly_decreasing,
    nonzero_alternating_sum,
    precondition_violated,
    invalid_sequence,
    not_in_pab,
    not_in_image,
    internal_invariant_violation,
    non_unit_constant_term,
    mismatched_order,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Checked arithmetic. Wraparound is never silent.
inline Int checked_add(Int x, Int y)
{
    Int r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(Errc::overflow, "integer addition overflowed 64 bits");
    return r;
}

inline Int checked_sub(Int x, Int y)
{
    Int r;
    if (__builtin_sub_overflow(x, y, &r))
        throw Error(Errc::overflow, "integer subtraction overflowed 64 bits");
    return r;
}

inline Int checked_mul(Int x, Int y)
{
    Int r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(Errc::overflow, "integer multiplication overflowed 64 bits");
    return r;
}

inline constexpr Int triangular(Int k) noexcept { return k * (k + 1) / 2; }

} // namespace parity_board

#endif // PARITY_BOARD_ERROR_HPP
