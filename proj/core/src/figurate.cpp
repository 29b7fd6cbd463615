#include "qgaps/figurate.hpp"

#include <stdexcept>

namespace qgaps {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("figurate value exceeds 64 bits");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("figurate value exceeds 64 bits");
    return out;
}

} // namespace

std::int64_t triangular(std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("triangular: k must be non-negative");
    // one of k, k+1 is even
    if (k % 2 == 0)
        return checked_mul(k / 2, k + 1);
    return checked_mul(k, (k + 1) / 2);
}

std::int64_t gen_pentagonal(std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("gen_pentagonal: k must be non-negative");
    if (k > (INT64_MAX - 2) / 3)
        throw std::overflow_error("gen_pentagonal: k too large");
    std::int64_t c1 = (k + 1) / 2;          // ceil(k/2)
    std::int64_t c2 = (3 * k + 2) / 2;      // ceil((3k+1)/2)
    // the product c1*c2 is always even; halve the even factor first
    if (c1 % 2 == 0)
        c1 /= 2;
    else
        c2 /= 2;
    return checked_mul(c1, c2);
}

std::int64_t polygonal(std::int64_t s, std::int64_t n) {
    if (s < 3)
        throw std::invalid_argument("polygonal: s must be >= 3");
    // (n^2(s-2) - n(s-4)) / 2 == n * (n(s-2) - (s-4)) / 2, always an integer
    std::int64_t t = checked_sub(checked_mul(n, s - 2), s - 4);
    std::int64_t v = checked_mul(n, t);
    return v / 2;
}

} // namespace qgaps
