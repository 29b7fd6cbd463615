#include "qgaps/memo_table.hpp"

#include "qgaps/figurate.hpp"

#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace qgaps {

MemoTable::MemoTable() : values_{mpz_class(1)} {}

long MemoTable::high_water() const {
    std::shared_lock lock(mutex_);
    return static_cast<long>(values_.size()) - 1;
}

void MemoTable::fill_locked(long n) {
    // p(m) = sum_{k>=1} -(-1)^ceil(k/2) p(m - G_k), G_k generalized pentagonal
    for (long m = static_cast<long>(values_.size()); m <= n; ++m) {
        mpz_class acc = 0;
        for (long k = 1;; ++k) {
            long g = gen_pentagonal(k);
            if (g > m)
                break;
            bool positive = ((k + 1) / 2) % 2 != 0; // -(-1)^ceil(k/2)
            if (positive)
                acc += values_[m - g];
            else
                acc -= values_[m - g];
        }
        values_.push_back(std::move(acc));
    }
}

void MemoTable::ensure(long n) {
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<long>(values_.size()))
            return;
    }
    std::unique_lock lock(mutex_);
    fill_locked(n);
}

mpz_class MemoTable::p(long n) {
    if (n < 0)
        return 0;
    ensure(n);
    std::shared_lock lock(mutex_);
    return values_[n];
}

mpz_class MemoTable::at(long n) const {
    if (n < 0)
        return 0;
    std::shared_lock lock(mutex_);
    if (n >= static_cast<long>(values_.size()))
        throw std::out_of_range("MemoTable::at: index beyond high water mark");
    return values_[n];
}

std::vector<mpz_class> MemoTable::prefix(long n) {
    if (n < 0)
        throw std::invalid_argument("MemoTable::prefix: n must be non-negative");
    ensure(n);
    std::shared_lock lock(mutex_);
    return {values_.begin(), values_.begin() + n + 1};
}

void MemoTable::save(std::ostream& os) const {
    std::shared_lock lock(mutex_);
    os << "pcache v1 " << values_.size() - 1 << '\n';
    for (const mpz_class& v : values_)
        os << v.get_str() << '\n';
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

void MemoTable::load(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        throw CacheFormatError(1, "line 1: missing header");
    std::istringstream hs(header);
    std::string magic, version;
    long max_n = -1;
    if (!(hs >> magic >> version >> max_n) || magic != "pcache" || version != "v1" || max_n < 0)
        throw CacheFormatError(1, "line 1: expected header 'pcache v1 <max_n>'");
    std::string tail;
    if (hs >> tail)
        throw CacheFormatError(1, "line 1: trailing data after header");

    std::vector<mpz_class> fresh;
    fresh.reserve(static_cast<std::size_t>(max_n) + 1);
    for (long i = 0; i <= max_n; ++i) {
        long line_no = i + 2;
        std::string line;
        if (!std::getline(is, line))
            throw CacheFormatError(line_no, "line " + std::to_string(line_no) + ": unexpected end of file");
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!all_digits(line))
            throw CacheFormatError(line_no, "line " + std::to_string(line_no) + ": not an unsigned decimal value");
        fresh.emplace_back(line, 10);
    }
    if (fresh[0] != 1)
        throw CacheFormatError(2, "line 2: p(0) must be 1");

    std::unique_lock lock(mutex_);
    values_ = std::move(fresh);
}

MemoTable& default_table() {
    static MemoTable table;
    return table;
}

} // namespace qgaps
