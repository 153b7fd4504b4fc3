#ifndef PARITY_BOARD_BIJECTIONS_HPP
#define PARITY_BOARD_BIJECTIONS_HPP

#include <optional>

#include "parity_board/abseq.hpp"
#include "parity_board/partitions.hpp"

namespace parity_board {

/// Image of a strict partition under iota: a staircase of height k (t is the
/// k-th triangular number) and the leftover column sequence.
struct IotaImage {
    Int t = 0;
    Int k = 0;
    ABSequence delta;

    static IotaImage from_height(Int k, ABSequence delta) { return {triangular(k), k, std::move(delta)}; }

    friend bool operator==(const IotaImage&, const IotaImage&) = default;
    friend auto operator<=>(const IotaImage&, const IotaImage&) = default;
};

/// Board filling S_{a,b} -> P_{a,b}, computed from the block counts
/// c_1 = d_1, c_i = d_i - c_{i-1}. Row j of the result is block B_{2j-1}
/// plus one cell from every column block B_{2i} reaching down to row j.
/// Throws Error(invalid_sequence) for the empty sequence or a(d) != a.
Partition phi(Int a, const ABSequence& d);

/// Reads block counts off the diagram laid on the board. Throws
/// Error(not_in_pab) when the largest part is at most a.
ABSequence phi_inverse(Int a, const Partition& p);

bool in_P_ab(const Partition& p, Int a, Int b);

/// Literal replay of the board-filling rules, cell by cell. Returns nullopt
/// if any rule cannot be followed or singly covered cells remain. Kept as an
/// independent check of phi().
std::optional<Partition> phi_by_board_simulation(Int a, const ABSequence& d);

IotaImage iota(const StrictPartition& s);
/// Throws Error(not_in_image) unless iota_image_check(img).
StrictPartition iota_inverse(const IotaImage& img);
bool iota_image_check(const IotaImage& img);

/// Brute force: strict partitions of n with m parts and BG-rank k.
Int count_strict_by_parts_rank(Int k, Int m, Int n);
/// The four-case count through (a,b)-sequences or bounded partitions. Zero
/// outside the range where the equality is claimed.
Int theorem34_rhs(Int k, Int m, Int n);

} // namespace parity_board

#endif // PARITY_BOARD_BIJECTIONS_HPP
