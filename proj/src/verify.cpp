#include "parity_board/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <tuple>

#include <fmt/format.h>
#include "json.hpp"

#include "parity_board/abseq.hpp"
#include "parity_board/bijections.hpp"
#include "parity_board/partitions.hpp"
#include "parity_board/qseries.hpp"
#include "parity_board/sweep.hpp"

namespace parity_board {

namespace {

using Clock = std::chrono::steady_clock;

struct Cell3 {
    Int x, y, z;
};

// Runs body; an Error escaping it becomes a mismatch instead of aborting the sweep.
template <class Body>
void guarded(VerificationReport& r, const std::string& params, Body&& body)
{
    try {
        body();
    } catch (const Error& e) {
        r.check(false, params, "no error", e.what());
    }
}

template <class Cell, class Fn>
void run_sharded(VerificationReport& report, const std::vector<Cell>& cells, Fn&& fn, int jobs)
{
    auto parts = map_cells(std::span<const Cell>(cells), fn, jobs);
    for (auto& p : parts)
        report.merge(std::move(p));
}

VerificationReport start(std::string subject, std::vector<std::pair<std::string, Int>> grid)
{
    VerificationReport r;
    r.subject = std::move(subject);
    r.parameter_grid = std::move(grid);
    return r;
}

std::string show(Int v) { return fmt::format("{}", v); }

// ---------------------------------------------------------------------------

VerificationReport check_phi_cell(Int a, Int b, Int n)
{
    VerificationReport r;
    const auto seqs = enumerate_S(a, b, n);
    for (const auto& d : seqs) {
        const std::string ps = fmt::format("a={} b={} delta={}", a, b, to_string(d));
        guarded(r, ps, [&] {
            const Partition lambda = phi(a, d);
            r.check(2 * lambda.weight() == d.weight(), ps + " weight", show(d.weight() / 2), show(lambda.weight()));
            r.check(in_P_ab(lambda, a, b), ps + " membership", "in P_{a,b}", to_string(lambda));
            const ABSequence back = phi_inverse(a, lambda);
            r.check(back == d, ps + " round-trip", to_string(d), to_string(back));
            const auto sim = phi_by_board_simulation(a, d);
            r.check(sim.has_value() && *sim == lambda, ps + " board", to_string(lambda),
                    sim ? to_string(*sim) : std::string("filling failed"));
        });
    }
    Int in_pab = 0;
    for (const auto& p : enumerate_partitions(n))
        if (in_P_ab(p, a, b))
            ++in_pab;
    r.check(in_pab == static_cast<Int>(seqs.size()), fmt::format("a={} b={} n={} count", a, b, n),
            show(static_cast<Int>(seqs.size())), show(in_pab));
    return r;
}

VerificationReport check_gf_cell(const CoeffTable& table, Int a, Int b)
{
    VerificationReport r;
    for (Int n = 0; n <= table.order(); ++n) {
        const std::string ps = fmt::format("a={} b={} n={}", a, b, n);
        if (b == 0) {
            r.check(table.at(a, b, n) == (a == 0 && n == 0 ? 1 : 0), ps, show(a == 0 && n == 0 ? 1 : 0),
                    show(table.at(a, b, n)));
            continue;
        }
        const auto seqs = enumerate_S(a, b, n);
        r.check(table.at(a, b, n) == static_cast<Int>(seqs.size()), ps, show(static_cast<Int>(seqs.size())),
                show(table.at(a, b, n)));
        for (const auto& d : seqs) {
            const std::string ds = fmt::format("a={} b={} delta={}", a, b, to_string(d));
            r.check(check_prefix_sign_property(d), ds + " prefix-sign", "true", "false");
            for (Int m = std::max<Int>(0, b - 1); m <= d.length(); ++m)
                if (d.prefix_alt_sum(m) == 0)
                    r.check(check_pairing_property(d, m), fmt::format("{} pairing n={}", ds, m), "true", "false");
        }
    }
    return r;
}

struct IotaCell {
    VerificationReport report;
    std::vector<std::pair<IotaImage, StrictPartition>> images;
};

IotaCell check_iota_cell(Int n)
{
    IotaCell out;
    auto& r = out.report;
    for (const auto& s : enumerate_strict_partitions(n)) {
        const std::string ps = fmt::format("s={}", to_string(s));
        guarded(r, ps, [&] {
            const IotaImage img = iota(s);
            r.check(img.t + img.delta.weight() == s.weight(), ps + " weight", show(s.weight()),
                    show(img.t + img.delta.weight()));
            r.check(iota_image_check(img), ps + " image", "passes image check",
                    fmt::format("(t={}, {})", img.t, to_string(img.delta)));
            const StrictPartition back = iota_inverse(img);
            r.check(back == s, ps + " round-trip", to_string(s), to_string(back));
            const Int rank = bg_rank(s);
            const Int k_expected = rank > 0 ? 2 * rank - 1 : -2 * rank;
            r.check(rank == -columns(s).alternating_sum() && img.k == k_expected, ps + " bg-rank bridge",
                    fmt::format("rank={} k={}", rank, k_expected),
                    fmt::format("alt={} k={}", columns(s).alternating_sum(), img.k));
            out.images.emplace_back(img, s);
        });
    }
    return out;
}

// All (t, delta) with t triangular and t + |delta| <= n_max, for one height k.
std::vector<IotaImage> iota_candidates(Int k, Int n_max)
{
    std::vector<IotaImage> out;
    const Int t = triangular(k);
    if (t > n_max)
        return out;
    out.push_back(IotaImage::from_height(k, ABSequence::empty()));
    for (Int half = 1; t + 2 * half <= n_max; ++half)
        for (Int a = 0; a + 1 <= 2 * half; ++a)
            for (Int b = 1; b * a + triangular(b) <= 2 * half; ++b)
                for (auto& d : enumerate_S(a, b, half))
                    out.push_back(IotaImage::from_height(k, std::move(d)));
    return out;
}

Int strict_count_with_rank(Int j, Int n)
{
    Int count = 0;
    for (const auto& s : enumerate_strict_partitions(n))
        if (bg_rank(s) == j)
            ++count;
    return count;
}

Int floor_mod(Int x, Int m) { return ((x % m) + m) % m; }

} // namespace

void VerificationReport::merge(VerificationReport&& part)
{
    checks_run += part.checks_run;
    skipped += part.skipped;
    for (auto& m : part.mismatches)
        mismatches.push_back(std::move(m));
}

void write_report(std::ostream& os, const VerificationReport& r, Format fmt)
{
    if (fmt == Format::tsv) {
        std::string grid;
        for (const auto& [name, value] : r.parameter_grid)
            grid += fmt::format("{}{}={}", grid.empty() ? "" : " ", name, value);
        os << "# " << r.subject << '\t' << grid << '\n';
        os << "checks_run\t" << r.checks_run << '\n';
        os << "skipped\t" << r.skipped << '\n';
        os << "mismatches\t" << r.mismatches.size() << '\n';
        for (const auto& m : r.mismatches)
            os << "mismatch\t" << m.params << "\texpected=" << m.expected << "\tactual=" << m.actual << '\n';
        os << "status\t" << (r.passed() ? "pass" : "fail") << '\n';
        return;
    }
    using nlohmann::ordered_json;
    ordered_json header;
    header["subject"] = r.subject;
    ordered_json grid = ordered_json::object();
    for (const auto& [name, value] : r.parameter_grid)
        grid[name] = value;
    header["grid"] = grid;
    os << header.dump() << '\n';
    for (const auto& m : r.mismatches) {
        ordered_json rec;
        rec["mismatch"] = {{"params", m.params}, {"expected", m.expected}, {"actual", m.actual}};
        os << rec.dump() << '\n';
    }
    ordered_json summary;
    summary["checks_run"] = r.checks_run;
    summary["skipped"] = r.skipped;
    summary["mismatches"] = r.mismatches.size();
    summary["status"] = r.passed() ? "pass" : "fail";
    os << summary.dump() << '\n';
}

VerificationReport verify_bijection_phi(Int a_max, Int b_max, Int n_max, int jobs)
{
    const auto t0 = Clock::now();
    auto report = start("verify-phi", {{"a_max", a_max}, {"b_max", b_max}, {"n_max", n_max}});
    std::vector<Cell3> cells;
    for (Int a = 0; a <= a_max; ++a)
        for (Int b = 1; b <= b_max; ++b)
            for (Int n = 0; n <= n_max; ++n)
                cells.push_back({a, b, n});
    run_sharded(report, cells, [](const Cell3& c) { return check_phi_cell(c.x, c.y, c.z); }, jobs);
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport verify_gf(Int max_a, Int max_b, Int order, int jobs)
{
    const auto t0 = Clock::now();
    auto report = start("verify-gf", {{"a_max", max_a}, {"b_max", max_b}, {"trunc", order}});
    const CoeffTable table = S_coefficients(max_a, max_b, order, jobs);
    std::vector<Cell3> cells;
    for (Int a = 0; a <= max_a; ++a)
        for (Int b = 0; b <= max_b; ++b)
            cells.push_back({a, b, 0});
    run_sharded(report, cells, [&table](const Cell3& c) { return check_gf_cell(table, c.x, c.y); }, jobs);
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport verify_iota(Int n_max, int jobs)
{
    const auto t0 = Clock::now();
    auto report = start("verify-iota", {{"n_max", n_max}});

    std::vector<Int> weights;
    for (Int n = 0; n <= n_max; ++n)
        weights.push_back(n);
    auto cells = map_cells(std::span<const Int>(weights), [](Int n) { return check_iota_cell(n); }, jobs);

    std::map<IotaImage, StrictPartition> image;
    for (auto& cell : cells) {
        report.merge(std::move(cell.report));
        for (auto& [img, s] : cell.images) {
            auto [it, fresh] = image.emplace(img, s);
            report.check(fresh, fmt::format("image (t={}, {})", img.t, to_string(img.delta)), "one preimage",
                         fresh ? to_string(s) : fmt::format("{} and {}", to_string(it->second), to_string(s)));
        }
    }

    // The image check accepts a candidate exactly when some strict partition maps to it.
    std::vector<Int> heights;
    for (Int k = 0; triangular(k) <= n_max; ++k)
        heights.push_back(k);
    auto parts = map_cells(
        std::span<const Int>(heights),
        [&image, n_max](Int k) {
            VerificationReport r;
            for (const auto& img : iota_candidates(k, n_max)) {
                const bool accepted = iota_image_check(img);
                const bool hit = image.contains(img);
                const std::string ps = fmt::format("candidate (t={}, {})", img.t, to_string(img.delta));
                r.check(accepted == hit, ps, hit ? "accepted (has preimage)" : "rejected (no preimage)",
                        accepted ? "accepted" : "rejected");
            }
            return r;
        },
        jobs);
    for (auto& p : parts)
        report.merge(std::move(p));

    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport verify_theorem34(Int k_min, Int k_max, Int m_max, Int n_max, int jobs)
{
    const auto t0 = Clock::now();
    auto report =
        start("verify-thm34", {{"k_min", k_min}, {"k_max", k_max}, {"m_max", m_max}, {"n_max", n_max}});
    std::vector<Cell3> cells;
    for (Int k = k_min; k <= k_max; ++k)
        for (Int m = 1; m <= m_max; ++m)
            for (Int n = 0; n <= n_max; ++n)
                cells.push_back({k, m, n});
    run_sharded(
        report, cells,
        [](const Cell3& c) {
            VerificationReport r;
            const Int lhs = count_strict_by_parts_rank(c.x, c.y, c.z);
            const Int rhs = theorem34_rhs(c.x, c.y, c.z);
            r.check(lhs == rhs, fmt::format("k={} m={} n={}", c.x, c.y, c.z), show(lhs), show(rhs));
            return r;
        },
        jobs);

    // Worked examples, at weights beyond the default grid.
    const std::tuple<Int, Int, Int, Int> spots[] = {{3, 6, 33, 3}, {2, 3, 16, 5}, {0, 3, 12, 4}, {-1, 2, 11, 3}};
    for (const auto& [k, m, n, expected] : spots) {
        const std::string ps = fmt::format("example k={} m={} n={}", k, m, n);
        report.check(count_strict_by_parts_rank(k, m, n) == expected, ps + " lhs", show(expected),
                     show(count_strict_by_parts_rank(k, m, n)));
        report.check(theorem34_rhs(k, m, n) == expected, ps + " rhs", show(expected), show(theorem34_rhs(k, m, n)));
    }
    report.elapsed = Clock::now() - t0;
    return report;
}

VerificationReport verify_euler_vandervelde(Int n_max, int jobs)
{
    const auto t0 = Clock::now();
    auto report = start("verify-euler", {{"n_max", n_max}});
    std::vector<Int> weights;
    for (Int n = 0; n <= n_max; ++n)
        weights.push_back(n);
    run_sharded(
        report, weights,
        [](Int n) {
            VerificationReport r;
            const auto strict = static_cast<Int>(enumerate_strict_partitions(n).size());
            Int pairs = 0;
            for (Int k = 0; triangular(k) <= n; ++k)
                pairs += static_cast<Int>(enumerate_partitions(n - triangular(k), std::nullopt, PartsFilter::even_only).size());
            r.check(strict == pairs, fmt::format("n={}", n), show(strict), show(pairs));
            return r;
        },
        jobs);
    report.elapsed = Clock::now() - t0;
    return report;
}

const std::vector<CongruenceFamily>& congruence_families()
{
    static const std::vector<CongruenceFamily> families = {
        {1, {9}}, {3, {3, 5}}, {4, {2, 6}}, {6, {4}}, {8, {0, 8}}, {9, {1, 7}},
    };
    return families;
}

VerificationReport verify_congruences(Int n_max, int jobs)
{
    constexpr Int max_abs_j = 5;
    constexpr Int oracle_limit = 30;
    const auto t0 = Clock::now();
    auto report = start("verify-congruences", {{"n_max", n_max}});

    std::vector<Cell3> cells; // (residue, j, argument)
    for (const auto& family : congruence_families())
        for (Int j = -max_abs_j; j <= max_abs_j; ++j)
            if (std::ranges::find(family.j_classes, floor_mod(j, 10)) != family.j_classes.end())
                for (Int arg = family.residue; arg <= n_max; arg += 10)
                    cells.push_back({family.residue, j, arg});

    run_sharded(
        report, cells,
        [](const Cell3& c) {
            VerificationReport r;
            const Int j = c.y;
            const Int arg = c.z;
            if (arg < j * (2 * j - 1)) {
                r.skipped = 1;
                return r;
            }
            const Int value = q_j_count(j, arg);
            const std::string ps = fmt::format("r={} j={} q_j({})", c.x, j, arg);
            r.check(value % 5 == 0, ps + " mod 5", "0", show(value % 5));
            if (arg <= oracle_limit) {
                const Int brute = strict_count_with_rank(j, arg);
                r.check(brute == value, ps + " oracle", show(brute), show(value));
            }
            return r;
        },
        jobs);
    report.elapsed = Clock::now() - t0;
    return report;
}

} // namespace parity_board
