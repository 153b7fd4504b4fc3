#include "parity_board/error.hpp"

namespace parity_board {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::overflow: return "Overflow";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::malformed_columns: return "MalformedColumns";
    case Errc::non_positive_entry: return "NonPositiveEntry";
    case Errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case Errc::nonzero_alternating_sum: return "NonzeroAlternatingSum";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::invalid_sequence: return "InvalidSequence";
    case Errc::not_in_pab: return "NotInPab";
    case Errc::not_in_image: return "NotInImage";
    case Errc::internal_invariant_violation: return "InternalInvariantViolation";
    case Errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case Errc::mismatched_order: return "MismatchedOrder";
    }
    return "Unknown";
}

} // namespace parity_board
