#include "parity_board/qseries.hpp"

#include <fmt/format.h>

#include "parity_board/partitions.hpp"
#include "parity_board/sweep.hpp"

namespace parity_board {

namespace {

void require_same_order(const TruncatedSeries& x, const TruncatedSeries& y)
{
    if (x.order() != y.order())
        throw Error(Errc::mismatched_order, fmt::format("orders {} and {} differ", x.order(), y.order()));
}

struct SliceTerm {
    Int a = 0;
    Int k = 0;
};

// The (i, k) summand split by powers of y:
//   y^{2k-1}: q^{k(i+k)} (1 - q^k) R,   y^{2k}: q^{k(i+k)+k} R,
// with R = 1 / ((q;q)_k (q;q)_{i+k}).
std::pair<TruncatedSeries, TruncatedSeries> expand_term(Int i, Int k, Int order)
{
    const TruncatedSeries r = series_reciprocal(pochhammer_q(k, order)) * series_reciprocal(pochhammer_q(i + k, order));
    const Int base = k * (i + k);
    TruncatedSeries odd = (r - r.shifted(k)).shifted(base);
    TruncatedSeries even = r.shifted(base + k);
    return {std::move(odd), std::move(even)};
}

void accumulate(CoeffTable& table, Int a, Int b, const TruncatedSeries& slice)
{
    if (b > table.max_b())
        return;
    for (Int n = 0; n <= table.order(); ++n)
        table.at(a, b, n) = checked_add(table.at(a, b, n), slice[n]);
}

} // namespace

TruncatedSeries::TruncatedSeries(Int order)
{
    if (order < 0)
        throw Error(Errc::precondition_violated, fmt::format("negative truncation order {}", order));
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(Int order, std::initializer_list<Int> low_coeffs) : TruncatedSeries(order)
{
    std::size_t i = 0;
    for (Int c : low_coeffs) {
        if (i < coeffs_.size())
            coeffs_[i] = c;
        ++i;
    }
}

TruncatedSeries TruncatedSeries::monomial(Int order, Int e, Int coeff)
{
    TruncatedSeries s(order);
    if (e >= 0 && e <= order)
        s.coeffs_[static_cast<std::size_t>(e)] = coeff;
    return s;
}

bool TruncatedSeries::is_zero() const noexcept
{
    for (Int c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] = checked_add(coeffs_[n], o.coeffs_[n]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] = checked_sub(coeffs_[n], o.coeffs_[n]);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y)
{
    require_same_order(x, y);
    TruncatedSeries r(x.order());
    const auto& xs = x.coeffs_;
    const auto& ys = y.coeffs_;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < xs.size(); ++j)
            r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(xs[i], ys[j]));
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(Int e) const
{
    TruncatedSeries r(order());
    for (Int n = 0; n + e <= order(); ++n)
        if (n + e >= 0)
            r.coeffs_[static_cast<std::size_t>(n + e)] = coeffs_[static_cast<std::size_t>(n)];
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& x, const TruncatedSeries& y) { return x + y; }

TruncatedSeries series_mul(const TruncatedSeries& x, const TruncatedSeries& y) { return x * y; }

TruncatedSeries series_reciprocal(const TruncatedSeries& s)
{
    const Int c0 = s[0];
    if (c0 != 1 && c0 != -1)
        throw Error(Errc::non_unit_constant_term, fmt::format("constant term {} is not a unit", c0));
    TruncatedSeries r(s.order());
    r.coeff(0) = c0;
    for (Int n = 1; n <= s.order(); ++n) {
        Int acc = 0;
        for (Int i = 1; i <= n; ++i)
            acc = checked_add(acc, checked_mul(s[i], r[n - i]));
        // c0 is its own inverse
        r.coeff(n) = checked_mul(-c0, acc);
    }
    return r;
}

TruncatedSeries pochhammer_q(Int k, Int order)
{
    if (k < 0)
        throw Error(Errc::precondition_violated, fmt::format("negative pochhammer length {}", k));
    TruncatedSeries p = TruncatedSeries::one(order);
    // factors with n > order are 1 after truncation
    for (Int n = 1; n <= std::min(k, order); ++n)
        p = p - p.shifted(n);
    return p;
}

CoeffTable::CoeffTable(Int max_a, Int max_b, Int order) : max_a_(max_a), max_b_(max_b), order_(order)
{
    if (max_a < 0 || max_b < 0 || order < 0)
        throw Error(Errc::precondition_violated, fmt::format("negative table bounds ({}, {}, {})", max_a, max_b, order));
    entries_.assign(static_cast<std::size_t>((max_a + 1) * (max_b + 1) * (order + 1)), 0);
}

std::size_t CoeffTable::index(Int a, Int b, Int n) const
{
    if (a < 0 || a > max_a_ || b < 0 || b > max_b_ || n < 0 || n > order_)
        throw Error(Errc::precondition_violated, fmt::format("({}, {}, {}) outside the table", a, b, n));
    return static_cast<std::size_t>((a * (max_b_ + 1) + b) * (order_ + 1) + n);
}

CoeffTable S_coefficients(Int max_a, Int max_b, Int order, int jobs)
{
    CoeffTable table(max_a, max_b, order);
    table.at(0, 0, 0) = 1;

    std::vector<SliceTerm> terms;
    for (Int i = 0; i <= max_a; ++i)
        for (Int k = 1; k * (i + k) <= order && 2 * k - 1 <= max_b; ++k)
            terms.push_back({i, k});

    const auto slices = map_cells(std::span<const SliceTerm>(terms),
                                  [order](const SliceTerm& t) { return expand_term(t.a, t.k, order); }, jobs);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        accumulate(table, terms[t].a, 2 * terms[t].k - 1, slices[t].first);
        accumulate(table, terms[t].a, 2 * terms[t].k, slices[t].second);
    }
    return table;
}

CoeffTable S_coefficients_serial(Int max_a, Int max_b, Int order)
{
    CoeffTable table(max_a, max_b, order);
    table.at(0, 0, 0) = 1;
    for (Int i = 0; i <= max_a; ++i) {
        for (Int k = 1; k * (i + k) <= order && 2 * k - 1 <= max_b; ++k) {
            const auto [odd, even] = expand_term(i, k, order);
            accumulate(table, i, 2 * k - 1, odd);
            accumulate(table, i, 2 * k, even);
        }
    }
    return table;
}

Int q_j_count(Int j, Int n)
{
    const Int rest = n - j * (2 * j - 1);
    if (rest < 0 || rest % 2 != 0)
        return 0;
    return partition_count(rest / 2);
}

TruncatedSeries gf_P_j(Int j, Int order)
{
    const Int e = j * (2 * j - 1);
    if (e > order)
        return TruncatedSeries(order);
    TruncatedSeries denom = TruncatedSeries::one(order);
    for (Int i = 1; i <= order / 2; ++i)
        denom = denom - denom.shifted(2 * i);
    return series_reciprocal(denom).shifted(e);
}

std::string to_string(const TruncatedSeries& s)
{
    std::string out;
    for (Int n = 0; n <= s.order(); ++n) {
        const Int c = s[n];
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        const Int mag = c < 0 ? -c : c;
        if (n == 0)
            out += fmt::format("{}", mag);
        else
            out += fmt::format("{}{}", mag == 1 ? "" : fmt::format("{}*", mag), n == 1 ? "q" : fmt::format("q^{}", n));
    }
    if (out.empty())
        out = "0";
    return out + fmt::format(" + O(q^{})", s.order() + 1);
}

} // namespace parity_board
