#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "uff/family.hpp"

namespace uff {

struct SearchConfig {
    int n = 0;  // accepted up to 16
    std::optional<std::chrono::milliseconds> time_limit;
    // Accepted for callers that want to suggest a worker count.  The search
    // runs sequentially either way: the result contract (canonically
    // smallest optimal witness, identical across runs) is then free, and the
    // grounds that finish at all are small.
    int thread_hint = 1;
    // Restrict the first chosen subset to the prefix {1..k} of its size
    // class; sound because any family can be relabeled to contain it.
    bool symmetry_reduction = false;
};

enum class SearchStatus { exact, timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::exact;
    std::size_t best_size = 0;
    Family witness;   // union-free at best_size, canonically smallest optimum
    std::uint64_t explored = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Depth-first branch-and-bound for M(n) over the 2^n - 1 non-empty subsets.
/// Candidates are tried in descending cardinality (ascending mask within a
/// size); feasibility is the incremental union-free test; branches that
/// cannot reach the incumbent size are cut, with upper_bound(n) as a global
/// cap.  On timeout the incumbent is returned as a certified lower bound,
/// never as exact.  Throws std::invalid_argument for n outside [1,16].
SearchResult max_union_free(const SearchConfig& config);

/// Independent certificate for the exhaustion rows: enumerates every family
/// of non-empty subsets of [n] (all 2^(2^n - 1) of them) and reports whether
/// none that is union-free exceeds the bound.  Refuses n > 4.
bool exhaustive_bound_check(int n, std::size_t bound);

}  // namespace uff
