#ifndef PARITY_BOARD_PARTITIONS_HPP
#define PARITY_BOARD_PARTITIONS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parity_board/error.hpp"

namespace parity_board {

/// A weakly decreasing list of positive parts. The empty list is the empty
/// partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws Error(invalid_partition) unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    Int weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// 1-based part access; parts past the end read as 0.
    Int part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

private:
    std::vector<Int> parts_;
    Int weight_ = 0;
};

/// A partition into distinct parts.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Throws Error(invalid_partition) unless parts are positive and strictly decreasing.
    explicit StrictPartition(std::vector<Int> parts);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    Int weight() const noexcept { return weight_; }
    std::size_t num_parts() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    Partition as_partition() const { return Partition(parts_); }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& x, const StrictPartition& y) { return x.parts_ <=> y.parts_; }

private:
    std::vector<Int> parts_;
    Int weight_ = 0;
};

/// Column lengths of a shifted Young diagram: a staircase 1, 2, ..., m followed
/// by a weakly decreasing tail bounded by m.
class ColumnSequence {
public:
    ColumnSequence() = default;
    /// Throws Error(malformed_columns) if the lengths are not those of a shifted diagram.
    explicit ColumnSequence(std::vector<Int> cols);

    const std::vector<Int>& cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return cols_.size(); }
    /// Length of the staircase prefix, which is the number of rows.
    Int staircase() const noexcept { return staircase_; }
    /// Sum over i of (-1)^i c_i.
    Int alternating_sum() const noexcept;

    friend bool operator==(const ColumnSequence&, const ColumnSequence&) = default;

private:
    std::vector<Int> cols_;
    Int staircase_ = 0;
};

/// The a-Durfee rectangle: rows x (rows + a). rows == 0 means the diagram has
/// no such rectangle, i.e. every part is at most a.
struct DurfeeRect {
    Int rows = 0;
    Int cols = 0;

    bool present() const noexcept { return rows > 0; }
    friend bool operator==(const DurfeeRect&, const DurfeeRect&) = default;
};

enum class PartsFilter { any, even_only };

// Enumerators return partitions in reverse-lexicographic order of part lists.
std::vector<Partition> enumerate_partitions(Int n, std::optional<Int> max_part = std::nullopt,
                                            PartsFilter filter = PartsFilter::any);
std::vector<StrictPartition> enumerate_strict_partitions(Int n, std::optional<Int> num_parts = std::nullopt);

/// p(n) by Euler's pentagonal-number recurrence; 0 for negative n.
Int partition_count(Int n);

/// Odd parts at odd (1-based) index minus odd parts at even index.
Int bg_rank(const Partition& p) noexcept;
Int bg_rank(const StrictPartition& p) noexcept;

ColumnSequence columns(const StrictPartition& s);
StrictPartition from_columns(const ColumnSequence& c);
/// Validates the raw lengths first; throws Error(malformed_columns).
StrictPartition from_columns(std::span<const Int> raw);

DurfeeRect durfee_rectangle(const Partition& p, Int a);

std::string to_string(const Partition& p);
std::string to_string(const StrictPartition& p);

} // namespace parity_board

#endif // PARITY_BOARD_PARTITIONS_HPP
