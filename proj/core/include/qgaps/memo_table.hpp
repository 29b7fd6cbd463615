#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace qgaps {

/// Raised on malformed cache files; line is 1-based within the file.
class CacheFormatError : public std::runtime_error {
public:
    CacheFormatError(long line, const std::string& what)
        : std::runtime_error(what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Growable cache of partition numbers p(0..high_water), filled by the
/// pentagonal-number recurrence. Reads take a shared lock, extension an
/// exclusive one; the table only ever grows.
class MemoTable {
public:
    MemoTable(); // holds p(0) = 1

    long high_water() const;

    /// Fills the table through index n (no-op when already filled).
    void ensure(long n);

    /// p(n); 0 for negative n, extending the table as needed.
    mpz_class p(long n);

    /// p(n) without extension; requires n <= high_water() (0 for n < 0).
    mpz_class at(long n) const;

    /// Copy of p(0..n), filling first; index i holds p(i).
    std::vector<mpz_class> prefix(long n);

    /// Writes "pcache v1 <max_n>" followed by one decimal value per line.
    void save(std::ostream& os) const;

    /// Replaces the table contents from a pcache v1 stream. On any format
    /// error throws CacheFormatError and leaves the table untouched.
    void load(std::istream& is);

private:
    void fill_locked(long n);

    mutable std::shared_mutex mutex_;
    std::vector<mpz_class> values_;
};

/// Process-wide table shared by the convolution-style sums.
MemoTable& default_table();

} // namespace qgaps
