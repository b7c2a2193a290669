#ifndef LWS_COUNTERS_HPP
#define LWS_COUNTERS_HPP

#include <cstdint>

namespace lws {

// Machine-independent work counters. Wall time is reported by the harness
// but never asserted; these are the quantities the complexity checks gate on.
//
//  - weight_queries: weight-model lookups plus per-element touches of the
//    sorting-based static solvers (the "entry evaluations" of the near-linear
//    routes; SMAWK entry evaluations land here through the model query).
//  - oracle_calls:   invocations of a core-problem oracle (MinInnProd
//    decisions, Selection calls, CC probes).
//  - conv_cells:     convolution output cells consumed, counting the
//    convolution as a black-box core problem.
//  - static_cells:   sum of half-widths N over all static queries issued by
//    the divide-and-conquer driver (recursion accounting).
struct WorkCounters {
    std::uint64_t weight_queries = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t conv_cells = 0;
    std::uint64_t static_cells = 0;

    void reset() { *this = WorkCounters{}; }
};

inline WorkCounters& counters() {
    thread_local WorkCounters c;
    return c;
}

}  // namespace lws

#endif
