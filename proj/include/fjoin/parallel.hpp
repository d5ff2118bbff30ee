#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fjoin/integer.hpp"

namespace fjoin::detail {

/// Below this many terms a reduction stays on the calling thread.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

/// Folds step(acc, i) for i in [0, count) into per-thread accumulators and
/// merges them with `+=` in thread order. Overflow inside a worker is
/// captured and rethrown on the calling thread; exceptions never cross the
/// OpenMP region boundary.
template <typename Acc, typename Step>
Acc parallel_reduce(std::size_t count, Step step) {
    const int threads = count >= kParallelThreshold ? max_threads() : 1;
    std::vector<Acc> partial(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    const auto total = static_cast<std::ptrdiff_t>(count);

#pragma omp parallel num_threads(threads) if (threads > 1)
    {
        const auto t = static_cast<std::size_t>(thread_id());
        Acc acc{};
        bool failed = false;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < total; ++i) {
            if (failed) continue;
            try {
                step(acc, static_cast<std::size_t>(i));
            } catch (...) {
                errors[t] = std::current_exception();
                failed = true;
            }
        }
        partial[t] = acc;
    }

    Acc result{};
    for (std::size_t t = 0; t < partial.size(); ++t) {
        if (errors[t]) std::rethrow_exception(errors[t]);
        result += partial[t];
    }
    return result;
}

template <typename Term>
Integer parallel_sum(std::size_t count, Term term) {
    return parallel_reduce<Integer>(count, [&](Integer& acc, std::size_t i) { acc += term(i); });
}

/// Runs body(i) for i in [0, count) across threads. The first exception (by
/// index) is rethrown after the loop completes.
template <typename Body>
void parallel_for(std::size_t count, Body body) {
    std::vector<std::exception_ptr> errors(count);
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace fjoin::detail
