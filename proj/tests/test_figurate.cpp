#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgaps/figurate.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

using namespace qgaps;

TEST_CASE("triangular numbers") {
    CHECK(triangular(0) == 0);
    CHECK(triangular(3) == 6);
    CHECK(triangular(4) == 10);
    CHECK_THROWS_AS(triangular(-1), std::invalid_argument);

    for (long k = 0; k < 1000; ++k)
        CHECK(triangular(k + 1) - triangular(k) == k + 1);
}

TEST_CASE("generalized pentagonal numbers") {
    CHECK(gen_pentagonal(0) == 0);
    CHECK(gen_pentagonal(1) == 1);
    CHECK(gen_pentagonal(4) == 7);
    const long prefix[] = {0, 1, 2, 5, 7, 12, 15, 22, 26};
    for (int k = 0; k < 9; ++k)
        CHECK(gen_pentagonal(k) == prefix[k]);
    CHECK_THROWS_AS(gen_pentagonal(-2), std::invalid_argument);
}

TEST_CASE("pentagonal values enumerate j(3j+-1)/2") {
    const long m = 60;
    std::set<long> single_index;
    for (long k = 0; k <= 2 * m; ++k)
        single_index.insert(gen_pentagonal(k));
    std::set<long> two_sided;
    for (long j = 0; j <= m; ++j) {
        two_sided.insert(j * (3 * j - 1) / 2);
        two_sided.insert(j * (3 * j + 1) / 2);
    }
    CHECK(single_index == two_sided);
}

TEST_CASE("polygonal numbers") {
    CHECK(polygonal(4, 3) == 9);
    CHECK(polygonal(5, -2) == 7);
    CHECK_THROWS_AS(polygonal(2, 1), std::invalid_argument);

    for (long n = 1; n <= 100; ++n)
        CHECK(polygonal(3, -n) == polygonal(3, n - 1));
    for (long k = 0; k <= 100; ++k)
        CHECK(polygonal(3, k) == triangular(k));
    for (long n = 0; n <= 100; ++n)
        CHECK(polygonal(4, -n) == polygonal(4, n));
    for (long s = 3; s <= 12; ++s)
        for (long n = 1; n <= 100; ++n)
            CHECK(polygonal(s, n) == (s - 3) * triangular(n - 1) + triangular(n));
}

TEST_CASE("P(r+2,-k) equals the short staircase size") {
    // staircase (1^r, ..., (k-1)^r, k^(r-1)) summed directly
    for (long r = 1; r <= 8; ++r) {
        for (long k = 0; k <= 50; ++k) {
            long size = 0;
            for (long part = 1; part < k; ++part)
                size += r * part;
            size += (r - 1) * k;
            CHECK(polygonal(r + 2, -k) == size);
            CHECK(polygonal(r + 2, -k) == r * triangular(k) - k);
        }
    }
}

TEST_CASE("overflow faults loudly") {
    CHECK_THROWS_AS(triangular(INT64_C(5000000000)), std::overflow_error);
    CHECK_THROWS_AS(gen_pentagonal(INT64_MAX), std::overflow_error);
    CHECK_THROWS_AS(polygonal(INT64_C(1000000000), INT64_C(1000000000)), std::overflow_error);
}
