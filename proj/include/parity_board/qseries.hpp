#ifndef PARITY_BOARD_QSERIES_HPP
#define PARITY_BOARD_QSERIES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "parity_board/error.hpp"

namespace parity_board {

/// Exact integer power series in q, truncated after q^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Int order);
    TruncatedSeries(Int order, std::initializer_list<Int> low_coeffs);

    static TruncatedSeries one(Int order) { return TruncatedSeries(order, {1}); }
    /// q^e, or zero when e > order.
    static TruncatedSeries monomial(Int order, Int e, Int coeff = 1);

    Int order() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of q^n; 0 past the truncation order.
    Int operator[](Int n) const noexcept { return n >= 0 && n <= order() ? coeffs_[n] : 0; }
    Int& coeff(Int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    bool is_zero() const noexcept;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }
    friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }
    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);

    /// Multiplies by q^e.
    TruncatedSeries shifted(Int e) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& x, const TruncatedSeries& y);
TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y);
/// Throws Error(non_unit_constant_term) unless the constant term is +1 or -1.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

/// (q;q)_k = prod_{n=1}^{k} (1 - q^n), truncated at order.
TruncatedSeries pochhammer_q(Int k, Int order);

/// Coefficients of x^a y^b q^n in the bivariate generating function of
/// (a,b)-sequences, for a <= max_a, b <= max_b, n <= order.
class CoeffTable {
public:
    CoeffTable(Int max_a, Int max_b, Int order);

    Int max_a() const noexcept { return max_a_; }
    Int max_b() const noexcept { return max_b_; }
    Int order() const noexcept { return order_; }

    Int at(Int a, Int b, Int n) const { return entries_.at(index(a, b, n)); }
    Int& at(Int a, Int b, Int n) { return entries_.at(index(a, b, n)); }

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

private:
    std::size_t index(Int a, Int b, Int n) const;

    Int max_a_;
    Int max_b_;
    Int order_;
    std::vector<Int> entries_;
};

/// Expands 1 + sum_i x^i sum_k (1 + (y-1)q^k) y^{2k-1} q^{k(i+k)} / ((q;q)_k (q;q)_{i+k})
/// one (i, k) term at a time, splitting each term into its y^{2k-1} and y^{2k}
/// slices. Terms are independent and computed across `jobs` OpenMP threads.
CoeffTable S_coefficients(Int max_a, Int max_b, Int order, int jobs = 1);
/// Single-threaded reference for S_coefficients.
CoeffTable S_coefficients_serial(Int max_a, Int max_b, Int order);

/// Strict partitions of n with BG-rank j, as p((n - j(2j-1)) / 2).
Int q_j_count(Int j, Int n);

/// q^{j(2j-1)} / prod_{i>=1} (1 - q^{2i}), truncated at order.
TruncatedSeries gf_P_j(Int j, Int order);

std::string to_string(const TruncatedSeries& s);

} // namespace parity_board

#endif // PARITY_BOARD_QSERIES_HPP
