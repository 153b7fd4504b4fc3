#ifndef PARITY_BOARD_SWEEP_HPP
#define PARITY_BOARD_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parity_board {

/// Applies fn to every cell in order on the calling thread.
template <class Cell, class Fn>
auto map_cells_serial(std::span<const Cell> cells, Fn&& fn)
{
    using Result = std::invoke_result_t<Fn&, const Cell&>;
    std::vector<Result> out;
    out.reserve(cells.size());
    for (const Cell& c : cells)
        out.push_back(fn(c));
    return out;
}

/// Applies fn to every cell across `jobs` OpenMP threads. Results land in the
/// slot of their cell, so the output never depends on scheduling. The first
/// exception (by cell order) is rethrown after the parallel region.
template <class Cell, class Fn>
auto map_cells(std::span<const Cell> cells, Fn&& fn, int jobs)
{
    using Result = std::invoke_result_t<Fn&, const Cell&>;
    if (jobs <= 1 || cells.size() < 2)
        return map_cells_serial(cells, fn);

    std::vector<std::optional<Result>> slots(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    const auto count = static_cast<std::ptrdiff_t>(cells.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(fn(cells[static_cast<std::size_t>(i)]));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Result> out;
    out.reserve(slots.size());
    for (auto& r : slots)
        out.push_back(std::move(*r));
    return out;
}

inline int max_jobs() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace parity_board

#endif // PARITY_BOARD_SWEEP_HPP
