#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgaps/counting.hpp"
#include "qgaps/figurate.hpp"
#include "qgaps/partition.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

using namespace qgaps;

namespace {

// partition numbers p(0..45), pinned; the enumeration cross-check below
// recounts the same values from scratch
const long kP[] = {1,     1,     2,     3,     5,     7,     11,    15,    22,    30,
                   42,    56,    77,    101,   135,   176,   231,   297,   385,   490,
                   627,   792,   1002,  1255,  1575,  1958,  2436,  3010,  3718,  4565,
                   5604,  6842,  8349,  10143, 12310, 14883, 17977, 21637, 26015, 31185,
                   37338, 44583, 53174, 63261, 75175, 89134};

bool parts_avoid_mod(const Partition& lam, long modulus, std::initializer_list<long> banned) {
    for (long v : lam.parts()) {
        long res = v % modulus;
        for (long b : banned)
            if (res == b)
                return false;
    }
    return true;
}

} // namespace

TEST_CASE("partition numbers") {
    MemoTable table;
    for (long n = 0; n <= 45; ++n)
        CHECK(table.p(n) == kP[n]);
    CHECK(partition_count(-3) == 0);
    CHECK(partition_count(5) == 7);

    // recurrence vs direct enumeration
    for (long n = 0; n <= 30; ++n)
        CHECK(partition_count(n, Mode::oracle) == kP[n]);
    CHECK(partition_count(40, Mode::oracle) == 37338);

    // monotone from n = 1 on
    table.ensure(300);
    for (long n = 2; n <= 300; ++n)
        CHECK(table.at(n) >= table.at(n - 1));
}

// second independent route: n*p(n) = sum_{k=1..n} sigma(k) p(n-k)
TEST_CASE("divisor-sum recurrence cross-check") {
    const long n_max = 400;
    std::vector<mpz_class> sigma(n_max + 1);
    for (long d = 1; d <= n_max; ++d)
        for (long m = d; m <= n_max; m += d)
            sigma[m] += d;

    MemoTable table;
    std::vector<mpz_class> pv = table.prefix(n_max);
    for (long n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (long k = 1; k <= n; ++k)
            acc += sigma[k] * pv[n - k];
        CHECK(acc == n * pv[n]);
    }
    // the table is exact past the 64-bit range
    CHECK(table.p(500) > mpz_class("18446744073709551615"));
}

TEST_CASE("pentagonal recurrence sums to the Kronecker delta") {
    MemoTable table;
    table.ensure(200);
    for (long n = 0; n <= 200; ++n) {
        mpz_class acc = 0;
        for (long k = 0;; ++k) {
            long g = gen_pentagonal(k);
            if (g > n)
                break;
            if (((k + 1) / 2) % 2 == 0)
                acc += table.at(n - g);
            else
                acc -= table.at(n - g);
        }
        CHECK(acc == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("distinct-part counts") {
    CHECK(distinct_count(0) == 1);
    CHECK(distinct_count(5) == 3);
    CHECK(distinct_count(6) == 4);
    auto table = distinct_count_table(30);
    for (long n = 0; n <= 30; ++n)
        CHECK(table[n] == distinct_count(n, Mode::oracle));
    CHECK_THROWS_AS(distinct_count(-1), std::invalid_argument);
}

TEST_CASE("gap sums S_r") {
    CHECK(gap_sum(5, 1) == 14);
    CHECK(gap_sum(5, 4) == 8);
    for (int r = 1; r <= 6; ++r)
        CHECK(gap_sum(0, r) == 1);
    CHECK_THROWS_AS(gap_sum(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gap_sum(-1, 1), std::invalid_argument);
}

TEST_CASE("gap drop counts G_r") {
    for (long n = 0; n <= 30; ++n)
        CHECK(gap_drop_count(n, 1) == partition_count(n));
    CHECK(gap_drop_count(5, 2) == 3);
    for (int r = 7; r <= 10; ++r)
        CHECK(gap_drop_count(5, r) == 0); // zero once r >= n + 2
    CHECK_THROWS_AS(gap_drop_count(5, 0), std::invalid_argument);
}

TEST_CASE("gap drop boundary laws") {
    MemoTable table;
    for (long n = 0; n <= 45; ++n) {
        CHECK(gap_drop_count(n, 1, Mode::fast, table) == table.p(n));
        CHECK(gap_drop_count(n, static_cast<int>(n) + 2, Mode::fast, table) == 0);
        CHECK(gap_drop_count(n, static_cast<int>(n) + 5, Mode::fast, table) == 0);
    }
}

TEST_CASE("U_r residue counts") {
    CHECK(mod4r_avoiding_count(2, 1) == 1);
    CHECK(mod4r_avoiding_count(4, 1) == 1);
    for (int r = 1; r <= 6; ++r)
        CHECK(mod4r_avoiding_count(0, r) == 1);
    // U_1(n) is the distinct count of n/2 for even n, zero for odd
    for (long n = 0; n <= 60; ++n) {
        mpz_class expected = (n % 2 == 0) ? distinct_count(n / 2) : mpz_class(0);
        CHECK(mod4r_avoiding_count(n, 1) == expected);
    }
    CHECK_THROWS_AS(mod4r_avoiding_count(3, 0), std::invalid_argument);
}

TEST_CASE("mod-32 restricted counts L") {
    CHECK(mod32_avoiding_count(0) == 1);
    CHECK(mod32_avoiding_count(2) == 1);
    CHECK(mod32_avoiding_count(10) == 20);
    for (long n = 0; n <= 60; ++n)
        CHECK(mod32_avoiding_count(n) == mod32_avoiding_count(n, Mode::oracle));
}

TEST_CASE("residue DPs agree with filtered enumeration") {
    const long n_max = 35;
    for (int r : {1, 2, 3}) {
        auto dp = mod4r_avoiding_table(n_max, r);
        for (long n = 0; n <= n_max; ++n) {
            mpz_class filtered = 0;
            for (const Partition& lam : partitions_of(n))
                if (parts_avoid_mod(lam, 4L * r, {0L, (long)r, 3L * r}))
                    filtered += 1;
            CHECK(dp[n] == filtered);
        }
    }
    auto ldp = mod32_avoiding_table(n_max);
    for (long n = 0; n <= n_max; ++n) {
        mpz_class filtered = 0;
        for (const Partition& lam : partitions_of(n))
            if (parts_avoid_mod(lam, 32, {0, 2, 12, 14, 16, 18, 20, 30}))
                filtered += 1;
        CHECK(ldp[n] == filtered);
    }
}

TEST_CASE("rank and crank counts") {
    CHECK(nonneg_rank_count(0) == 1);
    CHECK(nonneg_rank_count(5) == 4);
    CHECK(nonneg_rank_count(5) == partition_count(5) - partition_count(3));

    CHECK(nonneg_crank_count(0) == 1);
    CHECK(nonneg_crank_count(5) == 4);
    CHECK(nonneg_crank_count(5) ==
          partition_count(5) - partition_count(4) + partition_count(2));

    auto rdp = nonneg_rank_table(40);
    auto cdp = nonneg_crank_table(40);
    for (long n = 0; n <= 40; ++n) {
        CHECK(rdp[n] == nonneg_rank_count(n, Mode::oracle));
        CHECK(cdp[n] == nonneg_crank_count(n, Mode::oracle));
    }
}

TEST_CASE("even/odd part-count splits") {
    CHECK(even_parts_count(0) == 1);
    CHECK(even_parts_count(5) == 3);
    CHECK(even_parts_count(5) ==
          partition_count(5) - partition_count(4) + partition_count(1));
    for (long n = 0; n <= 40; ++n)
        CHECK(even_parts_count(n) + odd_parts_count(n) == partition_count(n));
}

TEST_CASE("oracle and fast paths agree across all sequences") {
    const long n_max = 25;
    for (long n = 0; n <= n_max; ++n) {
        CHECK(partition_count(n, Mode::fast) == partition_count(n, Mode::oracle));
        CHECK(distinct_count(n, Mode::fast) == distinct_count(n, Mode::oracle));
        CHECK(mod32_avoiding_count(n, Mode::fast) == mod32_avoiding_count(n, Mode::oracle));
        CHECK(nonneg_rank_count(n, Mode::fast) == nonneg_rank_count(n, Mode::oracle));
        CHECK(nonneg_crank_count(n, Mode::fast) == nonneg_crank_count(n, Mode::oracle));
        CHECK(even_parts_count(n, Mode::fast) == even_parts_count(n, Mode::oracle));
        CHECK(odd_parts_count(n, Mode::fast) == odd_parts_count(n, Mode::oracle));
        for (int r = 1; r <= 6; ++r) {
            CHECK(gap_sum(n, r, Mode::fast) == gap_sum(n, r, Mode::oracle));
            CHECK(gap_drop_count(n, r, Mode::fast) == gap_drop_count(n, r, Mode::oracle));
            CHECK(mod4r_avoiding_count(n, r, Mode::fast) ==
                  mod4r_avoiding_count(n, r, Mode::oracle));
        }
    }
}

TEST_CASE("memo table persistence") {
    MemoTable table;
    table.ensure(64);
    std::stringstream buf;
    table.save(buf);

    MemoTable loaded;
    loaded.load(buf);
    CHECK(loaded.high_water() == 64);
    for (long n = 0; n <= 64; ++n)
        CHECK(loaded.at(n) == table.at(n));

    // round trip is byte-identical
    std::stringstream again;
    loaded.save(again);
    std::stringstream reference;
    table.save(reference);
    CHECK(again.str() == reference.str());
}

TEST_CASE("memo table rejects malformed caches and stays untouched") {
    MemoTable table;
    table.ensure(10);

    auto expect_error = [&table](const std::string& text, long line) {
        std::istringstream in(text);
        try {
            table.load(in);
            FAIL("expected CacheFormatError");
        } catch (const CacheFormatError& e) {
            CHECK(e.line() == line);
            CHECK(std::string(e.what()).find("line " + std::to_string(line)) !=
                  std::string::npos);
        }
        CHECK(table.high_water() == 10); // untouched
    };

    expect_error("", 1);
    expect_error("pcache v2 3\n1\n1\n2\n3\n", 1);
    expect_error("pcache v1 3 junk\n1\n1\n2\n3\n", 1);
    expect_error("pcache v1 5\n1\n1\n2\n3\n5\nx7\n", 7);
    expect_error("pcache v1 5\n1\n1\n2\n3\n", 6); // truncated
    expect_error("pcache v1 1\n2\n1\n", 2);       // p(0) must be 1
}

TEST_CASE("memo table concurrent reads while filling") {
    MemoTable table;
    std::vector<std::thread> workers;
    std::vector<bool> ok(4, false);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&table, &ok, t] {
            bool good = true;
            for (long n = 0; n <= 150; ++n)
                good = good && table.p(n + t) > 0;
            ok[t] = good;
        });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 4; ++t)
        CHECK(ok[t]);
    CHECK(table.p(45) == kP[45]);
}

TEST_CASE("sequence dispatch") {
    CHECK(sequence_value("p", 5, std::nullopt) == 7);
    CHECK(sequence_value("S", 5, 1) == 14);
    CHECK_THROWS_AS(sequence_value("S", 5, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(sequence_value("p", 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(sequence_value("nope", 5, std::nullopt), std::invalid_argument);

    auto w = sequence_window("U", 20, 2);
    CHECK(w.values.size() == 21);
    for (long n = 0; n <= 20; ++n)
        CHECK(w.values[n] == mod4r_avoiding_count(n, 2));

    auto wl = sequence_window("L", 24, std::nullopt);
    for (long n = 0; n <= 24; ++n)
        CHECK(wl.values[n] == mod32_avoiding_count(n));
}
