#include "qgaps/counting.hpp"

#include "qgaps/figurate.hpp"
#include "qgaps/partition.hpp"
#include "qgaps/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgaps {

namespace {

void require_nonneg(long n, const char* who) {
    if (n < 0)
        throw std::invalid_argument(std::string(who) + ": n must be non-negative");
}

void require_r(int r, const char* who) {
    if (r < 1)
        throw std::invalid_argument(std::string(who) + ": r must be >= 1");
}

// sum of p(n - r*T_k) over k >= 0 while the shift stays within n
mpz_class gap_sum_fast(long n, int r, MemoTable& table) {
    mpz_class acc = 0;
    for (long k = 0;; ++k) {
        long shift = r * triangular(k);
        if (shift > n)
            break;
        acc += table.p(n - shift);
    }
    return acc;
}

mpz_class gap_sum_oracle(long n, int r) {
    mpz_class acc = 0;
    for (const Partition& lam : partitions_of(n))
        acc += least_gap(lam, r);
    return acc;
}

mpz_class gap_drop_fast(long n, int r, MemoTable& table) {
    mpz_class acc = 0;
    for (long k = 0;; ++k) {
        long shift = polygonal(r + 2, -k);
        if (shift > n)
            break;
        acc += table.p(n - shift);
    }
    return acc - gap_sum_fast(n, r, table);
}

mpz_class gap_drop_oracle(long n, int r) {
    mpz_class acc = 0;
    for (const Partition& lam : partitions_of(n))
        if (gap_drop(lam, r))
            acc += 1;
    return acc;
}

mpz_class mod4r_fast(long n, int r, MemoTable& table) {
    mpz_class acc = 0;
    for (long k = 0;; ++k) {
        long t = triangular(k);
        long shift = r * t;
        if (shift > n)
            break;
        if (t % 2 == 0)
            acc += table.p(n - shift);
        else
            acc -= table.p(n - shift);
    }
    return acc;
}

mpz_class rank_fast(long n, MemoTable& table) {
    mpz_class acc = 0;
    for (long k = 0;; ++k) {
        long shift = k * (3 * k + 1) / 2;
        if (shift > n)
            break;
        if (k % 2 == 0)
            acc += table.p(n - shift);
        else
            acc -= table.p(n - shift);
    }
    return acc;
}

mpz_class crank_fast(long n, MemoTable& table) {
    mpz_class acc = 0;
    for (long k = 0;; ++k) {
        long shift = triangular(k);
        if (shift > n)
            break;
        if (k % 2 == 0)
            acc += table.p(n - shift);
        else
            acc -= table.p(n - shift);
    }
    return acc;
}

mpz_class even_parts_fast(long n, MemoTable& table) {
    mpz_class acc = table.p(n);
    for (long k = 1; k * k <= n; ++k) {
        if (k % 2 == 0)
            acc += table.p(n - k * k);
        else
            acc -= table.p(n - k * k);
    }
    return acc;
}

std::vector<long> mod4r_allowed_parts(long n_max, int r) {
    std::vector<long> parts;
    long mod = 4L * r;
    for (long m = 1; m <= n_max; ++m) {
        long res = m % mod;
        if (res == 0 || res == r || res == 3L * r)
            continue;
        parts.push_back(m);
    }
    return parts;
}

std::vector<long> mod32_allowed_parts(long n_max) {
    static constexpr long banned[] = {0, 2, 12, 14, 16, 18, 20, 30};
    std::vector<long> parts;
    for (long m = 1; m <= n_max; ++m) {
        long res = m % 32;
        if (std::find(std::begin(banned), std::end(banned), res) != std::end(banned))
            continue;
        parts.push_back(m);
    }
    return parts;
}

// partitions of 0..n_max into exactly k parts, column by column:
// table[k][m] with table[k][m] = table[k-1][m-1] + table[k][m-k]
std::vector<std::vector<mpz_class>> exact_parts_table(long n_max) {
    std::vector<std::vector<mpz_class>> table;
    table.emplace_back(n_max + 1);
    table[0][0] = 1;
    for (long k = 1; k <= n_max; ++k) {
        std::vector<mpz_class> col(n_max + 1);
        for (long m = k; m <= n_max; ++m)
            col[m] = table[k - 1][m - 1] + col[m - k];
        table.push_back(std::move(col));
    }
    return table;
}

// partitions into at most `a` parts, each at most `b`, truncated at n_max:
// expand prod_{i=1..a} (1 - q^(b+i)) / (1 - q^i)
std::vector<mpz_class> box_partition_table(long a, long b, long n_max) {
    std::vector<mpz_class> c(n_max + 1);
    c[0] = 1;
    for (long i = 1; i <= a; ++i) {
        long e = b + i;
        for (long j = n_max; j >= e; --j)
            c[j] -= c[j - e];
        for (long j = i; j <= n_max; ++j)
            c[j] += c[j - i];
    }
    return c;
}

} // namespace

mpz_class partition_count(long n, Mode mode, MemoTable& table) {
    if (n < 0)
        return 0;
    if (mode == Mode::fast)
        return table.p(n);
    mpz_class cnt = 0;
    for ([[maybe_unused]] const Partition& lam : partitions_of(n))
        cnt += 1;
    return cnt;
}

mpz_class distinct_count(long n, Mode mode) {
    require_nonneg(n, "distinct_count");
    if (mode == Mode::fast)
        return distinct_count_table(n)[n];
    mpz_class cnt = 0;
    for (const Partition& lam : partitions_of(n)) {
        const auto& parts = lam.parts();
        bool distinct = std::adjacent_find(parts.begin(), parts.end()) == parts.end();
        if (distinct)
            cnt += 1;
    }
    return cnt;
}

mpz_class gap_sum(long n, int r, Mode mode, MemoTable& table) {
    require_nonneg(n, "gap_sum");
    require_r(r, "gap_sum");
    return mode == Mode::fast ? gap_sum_fast(n, r, table) : gap_sum_oracle(n, r);
}

mpz_class gap_drop_count(long n, int r, Mode mode, MemoTable& table) {
    require_nonneg(n, "gap_drop_count");
    require_r(r, "gap_drop_count");
    return mode == Mode::fast ? gap_drop_fast(n, r, table) : gap_drop_oracle(n, r);
}

mpz_class mod4r_avoiding_count(long n, int r, Mode mode, MemoTable& table) {
    require_nonneg(n, "mod4r_avoiding_count");
    require_r(r, "mod4r_avoiding_count");
    if (mode == Mode::fast)
        return mod4r_fast(n, r, table);
    return mod4r_avoiding_table(n, r)[n];
}

mpz_class mod32_avoiding_count(long n, Mode mode) {
    require_nonneg(n, "mod32_avoiding_count");
    if (mode == Mode::oracle)
        return mod32_avoiding_table(n)[n];
    static constexpr std::pair<long, long> specs[] = {
        {2, 32}, {12, 32}, {14, 32}, {16, 32},
        {18, 32}, {20, 32}, {30, 32}, {32, 32}};
    FormalPowerSeries s = multi_product(specs, n);
    s = s * euler_product(1, 1, n).inverse();
    return s[n];
}

mpz_class nonneg_rank_count(long n, Mode mode, MemoTable& table) {
    require_nonneg(n, "nonneg_rank_count");
    if (mode == Mode::fast)
        return rank_fast(n, table);
    mpz_class cnt = 0;
    for (const Partition& lam : partitions_of(n))
        if (rank_of(lam) >= 0)
            cnt += 1;
    return cnt;
}

mpz_class nonneg_crank_count(long n, Mode mode, MemoTable& table) {
    require_nonneg(n, "nonneg_crank_count");
    if (mode == Mode::fast)
        return crank_fast(n, table);
    mpz_class cnt = 0;
    for (const Partition& lam : partitions_of(n))
        if (crank_of(lam) >= 0)
            cnt += 1;
    return cnt;
}

mpz_class even_parts_count(long n, Mode mode, MemoTable& table) {
    require_nonneg(n, "even_parts_count");
    if (mode == Mode::fast)
        return even_parts_fast(n, table);
    mpz_class cnt = 0;
    for (const Partition& lam : partitions_of(n))
        if (lam.count() % 2 == 0)
            cnt += 1;
    return cnt;
}

mpz_class odd_parts_count(long n, Mode mode, MemoTable& table) {
    require_nonneg(n, "odd_parts_count");
    if (mode == Mode::fast)
        return table.p(n) - even_parts_fast(n, table);
    mpz_class cnt = 0;
    for (const Partition& lam : partitions_of(n))
        if (lam.count() % 2 != 0)
            cnt += 1;
    return cnt;
}

std::vector<mpz_class> restricted_partition_table(long n_max, const std::vector<long>& allowed_parts) {
    require_nonneg(n_max, "restricted_partition_table");
    std::vector<mpz_class> dp(n_max + 1);
    dp[0] = 1;
    for (long m : allowed_parts) {
        if (m < 1)
            throw std::invalid_argument("restricted_partition_table: parts must be positive");
        for (long j = m; j <= n_max; ++j)
            dp[j] += dp[j - m];
    }
    return dp;
}

std::vector<mpz_class> mod4r_avoiding_table(long n_max, int r) {
    require_nonneg(n_max, "mod4r_avoiding_table");
    require_r(r, "mod4r_avoiding_table");
    return restricted_partition_table(n_max, mod4r_allowed_parts(n_max, r));
}

std::vector<mpz_class> mod32_avoiding_table(long n_max) {
    require_nonneg(n_max, "mod32_avoiding_table");
    return restricted_partition_table(n_max, mod32_allowed_parts(n_max));
}

std::vector<mpz_class> distinct_count_table(long n_max) {
    require_nonneg(n_max, "distinct_count_table");
    // expand prod_{m=1..n_max} (1 + q^m)
    std::vector<mpz_class> dp(n_max + 1);
    dp[0] = 1;
    for (long m = 1; m <= n_max; ++m)
        for (long j = n_max; j >= m; --j)
            dp[j] += dp[j - m];
    return dp;
}

std::vector<mpz_class> nonneg_rank_table(long n_max) {
    require_nonneg(n_max, "nonneg_rank_table");
    auto exact = exact_parts_table(n_max);
    std::vector<mpz_class> out(n_max + 1);
    out[0] = 1;
    for (long k = 1; k <= n_max; ++k) {
        // partitions with exactly k parts have rank >= 0 unless every part
        // is at most k-1; subtract that box count
        std::vector<mpz_class> box;
        if (k >= 2)
            box = box_partition_table(k, k - 2, n_max - k);
        for (long m = k; m <= n_max; ++m) {
            out[m] += exact[k][m];
            if (!box.empty())
                out[m] -= box[m - k];
        }
    }
    return out;
}

std::vector<mpz_class> nonneg_crank_table(long n_max) {
    require_nonneg(n_max, "nonneg_crank_table");
    std::vector<mpz_class> out(n_max + 1);

    // partitions without 1's always have nonnegative crank
    {
        std::vector<long> parts;
        for (long m = 2; m <= n_max; ++m)
            parts.push_back(m);
        auto no_ones = restricted_partition_table(n_max, parts);
        for (long m = 0; m <= n_max; ++m)
            out[m] += no_ones[m];
    }

    // with w >= 1 ones: strip them; the rest (parts >= 2) needs at least
    // w parts exceeding w, so contributions need w + w*(w+1) <= n_max
    auto exact = exact_parts_table(n_max);
    std::vector<mpz_class> small_parts(n_max + 1); // parts restricted to 2..w
    small_parts[0] = 1;
    for (long w = 1; w * (w + 2) <= n_max; ++w) {
        if (w >= 2) // admit part w into the small-part pool
            for (long j = w; j <= n_max; ++j)
                small_parts[j] += small_parts[j - w];

        long budget = n_max - w; // weight left after the w ones
        if (budget < w * (w + 1))
            continue;
        // F[x] = partitions of x into exactly j >= w parts, all > w
        std::vector<mpz_class> f(budget + 1);
        for (long j = w; j * (w + 1) <= budget; ++j)
            for (long x = j * (w + 1); x <= budget; ++x)
                f[x] += exact[j][x - j * w];
        // convolve with the small-part pool and attach the w ones
        for (long x = w * (w + 1); x <= budget; ++x) {
            if (f[x] == 0)
                continue;
            for (long y = 0; x + y <= budget; ++y) {
                if (small_parts[y] == 0)
                    continue;
                out[w + x + y] += f[x] * small_parts[y];
            }
        }
    }
    return out;
}

namespace {

enum class Seq { p, q, S, G, U, L, R, C, pe, po };

Seq parse_sequence(std::string_view name, bool& needs_r) {
    needs_r = false;
    if (name == "p") return Seq::p;
    if (name == "q") return Seq::q;
    if (name == "S") { needs_r = true; return Seq::S; }
    if (name == "G") { needs_r = true; return Seq::G; }
    if (name == "U") { needs_r = true; return Seq::U; }
    if (name == "L") return Seq::L;
    if (name == "R") return Seq::R;
    if (name == "C") return Seq::C;
    if (name == "pe") return Seq::pe;
    if (name == "po") return Seq::po;
    throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

void check_r_usage(bool needs_r, const std::optional<int>& r, std::string_view name) {
    if (needs_r && !r)
        throw std::invalid_argument("sequence '" + std::string(name) + "' requires --r");
    if (!needs_r && r)
        throw std::invalid_argument("sequence '" + std::string(name) + "' does not take --r");
}

} // namespace

mpz_class sequence_value(std::string_view name, long n, std::optional<int> r, Mode mode, MemoTable& table) {
    bool needs_r = false;
    Seq seq = parse_sequence(name, needs_r);
    check_r_usage(needs_r, r, name);
    switch (seq) {
    case Seq::p: return partition_count(n, mode, table);
    case Seq::q: return distinct_count(n, mode);
    case Seq::S: return gap_sum(n, *r, mode, table);
    case Seq::G: return gap_drop_count(n, *r, mode, table);
    case Seq::U: return mod4r_avoiding_count(n, *r, mode, table);
    case Seq::L: return mod32_avoiding_count(n, mode);
    case Seq::R: return nonneg_rank_count(n, mode, table);
    case Seq::C: return nonneg_crank_count(n, mode, table);
    case Seq::pe: return even_parts_count(n, mode, table);
    case Seq::po: return odd_parts_count(n, mode, table);
    }
    throw std::logic_error("unreachable");
}

SequenceWindow sequence_window(std::string_view name, long n_max, std::optional<int> r, Mode mode, MemoTable& table) {
    require_nonneg(n_max, "sequence_window");
    bool needs_r = false;
    Seq seq = parse_sequence(name, needs_r);
    check_r_usage(needs_r, r, name);

    SequenceWindow w;
    w.name = std::string(name);
    w.r = r;
    w.start = 0;
    w.end = n_max;
    w.values.reserve(n_max + 1);

    // bulk routes where per-n evaluation would repeat the same expansion
    if (seq == Seq::U && mode == Mode::oracle) {
        w.values = mod4r_avoiding_table(n_max, *r);
        return w;
    }
    if (seq == Seq::L) {
        if (mode == Mode::oracle) {
            w.values = mod32_avoiding_table(n_max);
        } else {
            static constexpr std::pair<long, long> specs[] = {
                {2, 32}, {12, 32}, {14, 32}, {16, 32},
                {18, 32}, {20, 32}, {30, 32}, {32, 32}};
            FormalPowerSeries s = multi_product(specs, n_max);
            s = s * euler_product(1, 1, n_max).inverse();
            w.values.assign(s.coeffs().begin(), s.coeffs().end());
        }
        return w;
    }
    if (seq == Seq::q && mode == Mode::fast) {
        w.values = distinct_count_table(n_max);
        return w;
    }

    if (mode == Mode::fast)
        table.ensure(n_max);
    for (long n = 0; n <= n_max; ++n)
        w.values.push_back(sequence_value(name, n, r, mode, table));
    return w;
}

} // namespace qgaps
