#include "qgaps/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgaps {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long least_gap(const Partition& p, int r) {
    if (r < 1)
        throw std::invalid_argument("least_gap: r must be >= 1");
    const auto& parts = p.parts();
    // scan from the smallest part upward, consuming runs of equal values
    std::size_t i = parts.size();
    long m = 1;
    while (i > 0) {
        long v = parts[i - 1];
        if (v > m)
            return m; // m does not occur at all
        long cnt = 0;
        while (i > 0 && parts[i - 1] == v) {
            --i;
            ++cnt;
        }
        if (cnt < r)
            return m;
        ++m;
    }
    return m;
}

bool gap_drop(const Partition& p, int r) {
    if (r < 1)
        throw std::invalid_argument("gap_drop: r must be >= 1");
    if (r == 1)
        return true; // g_0 unbounded
    return least_gap(p, r) < least_gap(p, r - 1);
}

long rank_of(const Partition& p) {
    return p.largest() - p.count();
}

long crank_of(const Partition& p) {
    const auto& parts = p.parts();
    long omega = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it)
        ++omega;
    if (omega == 0)
        return p.largest();
    long mu = 0;
    for (long v : parts) {
        if (v <= omega)
            break;
        ++mu;
    }
    return mu - omega;
}

PartitionStatistics statistics(const Partition& p, int r_max) {
    if (r_max < 1)
        throw std::invalid_argument("statistics: r_max must be >= 1");
    PartitionStatistics st;
    const auto& parts = p.parts();
    st.largest = p.largest();
    st.rank = rank_of(p);
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it)
        ++st.omega;
    for (long v : parts) {
        if (v <= st.omega)
            break;
        ++st.mu;
    }
    st.crank = (st.omega == 0) ? st.largest : st.mu - st.omega;

    // g_r for all requested r in one ascending sweep over part values:
    // at the first value m with multiplicity c, every still-unset r > c
    // receives g_r = m. Terminates once g_1 is set (first missing value).
    int unset = r_max;
    std::size_t i = parts.size();
    long m = 1;
    while (unset > 0) {
        long cnt = 0;
        if (i > 0 && parts[i - 1] == m) {
            long v = parts[i - 1];
            while (i > 0 && parts[i - 1] == v) {
                --i;
                ++cnt;
            }
        }
        for (int r = static_cast<int>(cnt) + 1; r <= r_max; ++r) {
            if (!st.least_gap.contains(r)) {
                st.least_gap.emplace(r, m);
                --unset;
            }
        }
        ++m;
    }
    return st;
}

PartitionStream::PartitionStream(long n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("PartitionStream: n must be non-negative");
}

const Partition* PartitionStream::next() {
    if (done_)
        return nullptr;
    if (!started_) {
        started_ = true;
        if (n_ == 0) {
            done_ = true; // the empty partition, emitted once
            return &current_;
        }
        current_.parts_.assign(1, n_);
        current_.n_ = n_;
        return &current_;
    }

    auto& parts = current_.parts_;
    // find the last part greater than 1; everything after it is a run of 1's
    std::size_t i = parts.size();
    while (i > 0 && parts[i - 1] == 1)
        --i;
    if (i == 0) {
        done_ = true;
        return nullptr;
    }
    long ones = static_cast<long>(parts.size() - i);
    parts.resize(i);
    long m = --parts[i - 1];
    long rem = ones + 1;
    while (rem > m) {
        parts.push_back(m);
        rem -= m;
    }
    if (rem > 0)
        parts.push_back(rem);
    return &current_;
}

} // namespace qgaps
