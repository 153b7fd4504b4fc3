#ifndef PARITY_BOARD_VERIFY_HPP
#define PARITY_BOARD_VERIFY_HPP

#include <chrono>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "parity_board/error.hpp"

namespace parity_board {

enum class Format { tsv, json_lines };

struct Mismatch {
    std::string params;
    std::string expected;
    std::string actual;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of one verification sweep. A report passes iff it has no
/// mismatches. Everything except `elapsed` is serialized, so equal
/// parameters give byte-identical output regardless of timing or job count.
struct VerificationReport {
    std::string subject;
    std::vector<std::pair<std::string, Int>> parameter_grid;
    Int checks_run = 0;
    Int skipped = 0;
    std::vector<Mismatch> mismatches;
    std::chrono::duration<double> elapsed{0};

    bool passed() const noexcept { return mismatches.empty(); }
    void check(bool ok, std::string params, std::string expected, std::string actual)
    {
        ++checks_run;
        if (!ok)
            mismatches.push_back({std::move(params), std::move(expected), std::move(actual)});
    }
    void merge(VerificationReport&& part);
};

void write_report(std::ostream& os, const VerificationReport& r, Format fmt);

// Every sweep shards its parameter grid over `jobs` OpenMP threads; jobs <= 1
// runs the serial reference path. Cells are merged in canonical order.

/// Round-trip, weight law, P_{a,b} membership, board-simulation agreement and
/// |S_{a,b}(2n)| = |P_{a,b}(n)| for a <= a_max, 1 <= b <= b_max, n <= n_max.
VerificationReport verify_bijection_phi(Int a_max, Int b_max, Int n_max, int jobs = 1);

/// Series coefficients against brute-force |S_{a,b}| for the whole table.
VerificationReport verify_gf(Int max_a, Int max_b, Int order, int jobs = 1);

/// Round-trip, weight additivity, injectivity and the image characterization
/// in both directions, over strict partitions of n <= n_max.
VerificationReport verify_iota(Int n_max, int jobs = 1);

/// Brute-force counts against the four-case formula on the (k, m, n) grid,
/// plus the four worked examples.
VerificationReport verify_theorem34(Int k_min, Int k_max, Int m_max, Int n_max, int jobs = 1);

/// Strict partitions of n against pairs (triangular t, even-part partition of n - t).
VerificationReport verify_euler_vandervelde(Int n_max, int jobs = 1);

/// The six mod-5 families for q_j on small representatives |j| <= 5, plus a
/// brute-force cross-check of q_j where the argument is at most 30.
VerificationReport verify_congruences(Int n_max, int jobs = 1);

/// One mod-5 family: q_j(10n + residue) = 0 (mod 5) whenever j mod 10 is in j_classes.
struct CongruenceFamily {
    Int residue;
    std::vector<Int> j_classes;
};
const std::vector<CongruenceFamily>& congruence_families();

} // namespace parity_board

#endif // PARITY_BOARD_VERIFY_HPP
