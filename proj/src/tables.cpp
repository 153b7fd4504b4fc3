#include "parity_board/tables.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "json.hpp"
#include "parity_board/bijections.hpp"
#include "parity_board/partitions.hpp"
#include "parity_board/qseries.hpp"

namespace parity_board {

namespace {

using nlohmann::ordered_json;

std::string plus_form(const StrictPartition& s)
{
    return s.empty() ? std::string("0") : fmt::format("{}", fmt::join(s.parts(), "+"));
}

class Writer {
public:
    Writer(std::ostream& os, Format fmt) : os_(os), fmt_(fmt) {}

    void header(std::string_view title, const ordered_json& params, const std::vector<std::string>& columns)
    {
        columns_ = columns;
        if (fmt_ == Format::tsv) {
            std::vector<std::string> kv;
            for (const auto& [k, v] : params.items())
                kv.push_back(fmt::format("{}={}", k, v.dump()));
            os_ << "# " << title << '\t' << fmt::format("{}", fmt::join(kv, " ")) << '\n';
            os_ << fmt::format("{}", fmt::join(columns, "\t")) << '\n';
        } else {
            ordered_json h;
            h["table"] = title;
            h["params"] = params;
            os_ << h.dump() << '\n';
        }
    }

    // values are JSON scalars or arrays; TSV renders arrays as {x,y,...}
    void row(const std::vector<ordered_json>& values)
    {
        if (fmt_ == Format::tsv) {
            std::vector<std::string> cells;
            for (const auto& v : values) {
                if (v.is_array()) {
                    std::vector<std::string> items;
                    for (const auto& x : v)
                        items.push_back(x.dump());
                    cells.push_back(fmt::format("{{{}}}", fmt::join(items, ",")));
                } else if (v.is_string()) {
                    cells.push_back(v.get<std::string>());
                } else {
                    cells.push_back(v.dump());
                }
            }
            os_ << fmt::format("{}", fmt::join(cells, "\t")) << '\n';
        } else {
            ordered_json rec;
            for (std::size_t i = 0; i < values.size(); ++i)
                rec[columns_[i]] = values[i];
            os_ << rec.dump() << '\n';
        }
    }

private:
    std::ostream& os_;
    Format fmt_;
    std::vector<std::string> columns_;
};

} // namespace

std::optional<TableKind> parse_table_kind(std::string_view name)
{
    if (name == "table1")
        return TableKind::table1;
    if (name == "s-coeffs")
        return TableKind::s_coeffs;
    if (name == "theorem34")
        return TableKind::theorem34;
    if (name == "counts")
        return TableKind::counts;
    return std::nullopt;
}

std::string_view to_string(TableKind kind)
{
    switch (kind) {
    case TableKind::table1: return "table1";
    case TableKind::s_coeffs: return "s-coeffs";
    case TableKind::theorem34: return "theorem34";
    case TableKind::counts: return "counts";
    }
    return "unknown";
}

void emit_table(std::ostream& os, TableKind kind, const TableParams& p, Format fmt)
{
    Writer w(os, fmt);
    switch (kind) {
    case TableKind::table1: {
        w.header("table1: strict partitions and their (t, Delta) images", ordered_json{{"n", p.n}},
                 {"partition", "t", "delta"});
        for (const auto& s : enumerate_strict_partitions(p.n)) {
            const IotaImage img = iota(s);
            w.row({plus_form(s), img.t, img.delta.entries()});
        }
        break;
    }
    case TableKind::s_coeffs: {
        w.header("s-coeffs: coefficient of x^a y^b q^n",
                 ordered_json{{"a_max", p.a_max}, {"b_max", p.b_max}, {"trunc", p.trunc}}, {"a", "b", "n", "coeff"});
        const CoeffTable table = S_coefficients(p.a_max, p.b_max, p.trunc);
        for (Int a = 0; a <= p.a_max; ++a)
            for (Int b = 0; b <= p.b_max; ++b)
                for (Int n = 0; n <= p.trunc; ++n)
                    w.row({a, b, n, table.at(a, b, n)});
        break;
    }
    case TableKind::theorem34: {
        w.header("theorem34: strict partitions by parts and BG-rank",
                 ordered_json{{"k_min", p.k_min}, {"k_max", p.k_max}, {"m_max", p.m_max}, {"n_max", p.n_max}},
                 {"k", "m", "n", "lhs", "rhs"});
        for (Int k = p.k_min; k <= p.k_max; ++k)
            for (Int m = 1; m <= p.m_max; ++m)
                for (Int n = 0; n <= p.n_max; ++n) {
                    const Int lhs = count_strict_by_parts_rank(k, m, n);
                    const Int rhs = theorem34_rhs(k, m, n);
                    if (lhs != 0 || rhs != 0)
                        w.row({k, m, n, lhs, rhs});
                }
        break;
    }
    case TableKind::counts: {
        w.header("counts: partitions, strict partitions, even-part partitions plus a triangular part",
                 ordered_json{{"n", p.n}}, {"n", "partitions", "strict", "even_plus_triangular"});
        for (Int n = 0; n <= p.n; ++n) {
            Int pairs = 0;
            for (Int k = 0; triangular(k) <= n; ++k)
                pairs += static_cast<Int>(
                    enumerate_partitions(n - triangular(k), std::nullopt, PartsFilter::even_only).size());
            w.row({n, partition_count(n), static_cast<Int>(enumerate_strict_partitions(n).size()), pairs});
        }
        break;
    }
    }
}

} // namespace parity_board
