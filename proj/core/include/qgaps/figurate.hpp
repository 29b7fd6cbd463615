#pragma once

#include <cstdint>

namespace qgaps {

/// k-th triangular number k(k+1)/2. Rejects k < 0; throws std::overflow_error
/// instead of wrapping.
std::int64_t triangular(std::int64_t k);

/// k-th generalized pentagonal number, single-index form
/// (1/2)*ceil(k/2)*ceil((3k+1)/2). Sequence: 0, 1, 2, 5, 7, 12, 15, ...
std::int64_t gen_pentagonal(std::int64_t k);

/// n-th s-gonal number (n^2(s-2) - n(s-4))/2 for s >= 3. Negative n yields the
/// generalized values, e.g. polygonal(r+2, -k) is the size of the staircase
/// (1^r, ..., (k-1)^r, k^(r-1)), which equals r*T_k - k.
std::int64_t polygonal(std::int64_t s, std::int64_t n);

} // namespace qgaps
