#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgaps {

/// Power series in q truncated at a fixed order N: coefficients of q^0..q^N,
/// exact integers. Arithmetic never reads or fabricates coefficients beyond
/// the truncation order; binary operations require equal orders.
class FormalPowerSeries {
public:
    explicit FormalPowerSeries(long order);              // zero series
    explicit FormalPowerSeries(std::vector<mpz_class> coeffs); // order = size-1

    static FormalPowerSeries one(long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const mpz_class& operator[](long i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    mpz_class& coeff(long i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Prefix of length m+1; requires m <= order().
    FormalPowerSeries truncated(long m) const;

    /// Multiplicative inverse up to the truncation order; the constant
    /// coefficient must be 1 or -1.
    FormalPowerSeries inverse() const;

    /// In-place multiplication by the sparse binomial (1 + sign*q^e), e >= 1.
    FormalPowerSeries& mul_binomial(long e, int sign);

    /// Conventional rendering, zero terms skipped: "1 - q - q^3 + q^6".
    std::string to_string() const;
    /// JSON array of decimal strings: ["1","-1","0",...].
    std::string to_json() const;

    bool operator==(const FormalPowerSeries&) const = default;

    friend FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b);
    friend FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b);
    friend FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);

private:
    std::vector<mpz_class> coeffs_;
};

/// Truncated (q^a; q^b)_inf = prod_{k>=0, a+kb<=N} (1 - q^(a+kb)). a, b >= 1.
FormalPowerSeries euler_product(long a, long b, long order);

/// Product of euler_product expansions for each (a, b) pair; empty list = 1.
FormalPowerSeries multi_product(std::span<const std::pair<long, long>> specs, long order);

/// Theta sum over triangular exponents: coefficient sign^(T_k) at q^(T_k) for
/// sign = -1, or 1 at q^(T_k) for sign = +1; zero elsewhere.
FormalPowerSeries theta_triangular(int sign, long order);

/// 1 + 2*sum_{k>=1} (-1)^k q^(k^2), truncated.
FormalPowerSeries theta_square(long order);

/// Generating series of the least-gap sums: coefficient n is the sum of g_r
/// over all partitions of n. Expands (q^2r;q^2r)/((q;q)(q^r;q^2r)).
FormalPowerSeries gap_sum_series(int r, long order);

/// Generating series of partition counts avoiding residues {0, r, 3r} mod 4r:
/// expands (q^r,q^3r,q^4r;q^4r)/(q;q).
FormalPowerSeries mod4r_avoiding_series(int r, long order);

} // namespace qgaps
