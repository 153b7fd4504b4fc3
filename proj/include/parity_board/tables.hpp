#ifndef PARITY_BOARD_TABLES_HPP
#define PARITY_BOARD_TABLES_HPP

#include <optional>
#include <ostream>
#include <string_view>

#include "parity_board/error.hpp"
#include "parity_board/verify.hpp"

namespace parity_board {

enum class TableKind { table1, s_coeffs, theorem34, counts };

std::optional<TableKind> parse_table_kind(std::string_view name);
std::string_view to_string(TableKind kind);

struct TableParams {
    Int n = 7;        // table1, counts
    Int a_max = 4;    // s-coeffs
    Int b_max = 8;    // s-coeffs
    Int trunc = 15;   // s-coeffs
    Int k_min = -3;   // theorem34
    Int k_max = 3;    // theorem34
    Int m_max = 8;    // theorem34
    Int n_max = 30;   // theorem34
};

/// Byte-stable tabular output; the first line/record names the table.
void emit_table(std::ostream& os, TableKind kind, const TableParams& params, Format fmt);

} // namespace parity_board

#endif // PARITY_BOARD_TABLES_HPP
