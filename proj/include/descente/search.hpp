#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

#include "descente/fermat.hpp"

// Exhaustive search for solutions of x0^2 + x1^2 = x2^2, x0*x1 = 2*x3^2.
//
// Triples come from generator pairs (p, q) and their multiples. Each pair is
// one work block; workers pull blocks from a shared counter, results are
// sorted by (x2, x0). A cache file records blocks that finished without a
// solution, one "p q done" line each, under a header naming the bound and
// mode; a cache written for other parameters is discarded.

namespace descente {

struct SearchOptions {
    Natural bound = 1;
    bool zeros = false;  // admit zero components; legs then come in both orders
    unsigned workers = 1;
    std::optional<std::filesystem::path> cache;
};

struct SearchResult {
    std::vector<CandidateSolution> solutions;
    Natural bound;
    double elapsed_seconds = 0;
    std::uint64_t blocks = 0;
    std::uint64_t blocks_resumed = 0;

    [[nodiscard]] std::uint64_t count() const noexcept { return solutions.size(); }
};

/// The cache file could not be read or written.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadruples with 1 <= x0 <= x1 and x2 <= bound_x2; empty by the theorem.
SearchResult exhaustive_search(const Natural& bound_x2);
SearchResult exhaustive_search(const SearchOptions& options);

}  // namespace descente
