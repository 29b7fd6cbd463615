#pragma once

#include "qgaps/memo_table.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgaps {

/// fast = identity/convolution/product route; oracle = definitional count
/// (partition enumeration, or the residue DP for the restricted-part counts).
enum class Mode { fast, oracle };

/// p(n) by the pentagonal recurrence (fast) or by counting the enumeration
/// stream (oracle). Zero for negative n.
mpz_class partition_count(long n, Mode mode = Mode::fast, MemoTable& table = default_table());

/// Number of partitions of n into distinct parts. Fast path expands the
/// product of (1 + q^m); oracle filters the enumeration stream.
mpz_class distinct_count(long n, Mode mode = Mode::fast);

/// S_r(n): sum of the least r-gaps over all partitions of n.
/// Fast path: sum of p(n - r*T_k).
mpz_class gap_sum(long n, int r, Mode mode = Mode::fast, MemoTable& table = default_table());

/// G_r(n): number of partitions of n whose least r-gap is strictly below the
/// least (r-1)-gap (all of them for r = 1). Fast path: sum of
/// p(n - polygonal(r+2, -k)) minus S_r(n).
mpz_class gap_drop_count(long n, int r, Mode mode = Mode::fast, MemoTable& table = default_table());

/// U_r(n): partitions of n into parts avoiding residues {0, r, 3r} mod 4r.
/// Fast path: sum of (-1)^(T_k) p(n - r*T_k); oracle: residue-restricted DP.
mpz_class mod4r_avoiding_count(long n, int r, Mode mode = Mode::fast, MemoTable& table = default_table());

/// L(n): partitions of n into parts avoiding residues
/// {0,2,12,14,16,18,20,30} mod 32. Fast path extracts coefficients of the
/// matching (mod 32) eight-factor product divided by (q;q); oracle: DP.
mpz_class mod32_avoiding_count(long n, Mode mode = Mode::fast);

/// R(n): partitions of n with nonnegative rank.
/// Fast path: sum of (-1)^k p(n - k(3k+1)/2).
mpz_class nonneg_rank_count(long n, Mode mode = Mode::fast, MemoTable& table = default_table());

/// C(n): partitions of n with nonnegative crank.
/// Fast path: sum of (-1)^k p(n - T_k).
mpz_class nonneg_crank_count(long n, Mode mode = Mode::fast, MemoTable& table = default_table());

/// p_e(n): partitions of n into an even number of parts.
/// Fast path: p(n) + sum_{k>=1} (-1)^k p(n - k^2).
mpz_class even_parts_count(long n, Mode mode = Mode::fast, MemoTable& table = default_table());

/// p_o(n) = p(n) - p_e(n).
mpz_class odd_parts_count(long n, Mode mode = Mode::fast, MemoTable& table = default_table());

// ---- bulk table builders ---------------------------------------------------
// Each returns values for n = 0..n_max by a route independent of the
// convolution sums above; the verification harness compares against these.

/// Partitions using only the given part sizes (classic unbounded-parts DP).
std::vector<mpz_class> restricted_partition_table(long n_max, const std::vector<long>& allowed_parts);

/// U_r(0..n_max) by residue-restricted DP.
std::vector<mpz_class> mod4r_avoiding_table(long n_max, int r);

/// L(0..n_max) by residue-restricted DP.
std::vector<mpz_class> mod32_avoiding_table(long n_max);

/// q(0..n_max) by expanding the product of (1 + q^m).
std::vector<mpz_class> distinct_count_table(long n_max);

/// R(0..n_max): for each part count k, partitions with exactly k parts minus
/// those whose largest part stays below k (a bounded-box count).
std::vector<mpz_class> nonneg_rank_table(long n_max);

/// C(0..n_max): split on the number of 1's; the 1-free remainder must carry
/// at least omega parts exceeding omega.
std::vector<mpz_class> nonneg_crank_table(long n_max);

// ---- CLI transport ----------------------------------------------------------

struct SequenceWindow {
    std::string name;
    std::optional<int> r;
    long start = 0;
    long end = 0;
    std::vector<mpz_class> values; // length end - start + 1
};

/// Values of a named sequence for n = 0..n_max. Names: p, q, S, G, U, L, R,
/// C, pe, po; r is required exactly for S, G, U. Uses bulk routes where that
/// is cheaper than per-n evaluation.
SequenceWindow sequence_window(std::string_view name, long n_max, std::optional<int> r,
                               Mode mode = Mode::fast, MemoTable& table = default_table());

/// Single value of a named sequence (same naming and r rules).
mpz_class sequence_value(std::string_view name, long n, std::optional<int> r,
                         Mode mode = Mode::fast, MemoTable& table = default_table());

} // namespace qgaps
