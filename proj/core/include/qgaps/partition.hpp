#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <vector>

namespace qgaps {

/// A partition of n: weakly decreasing positive parts. The empty sequence is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts); // validates ordering/positivity

    const std::vector<long>& parts() const { return parts_; }
    long n() const { return n_; }
    long count() const { return static_cast<long>(parts_.size()); }
    long largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }

private:
    friend class PartitionStream;
    std::vector<long> parts_;
    long n_ = 0;
};

/// Least r-gap g_r: the smallest positive integer appearing fewer than r times
/// as a part. r >= 1; g_r of the empty partition is 1.
long least_gap(const Partition& p, int r);

/// True when g_r < g_{r-1}, with g_0 treated as unbounded (so always true for
/// r == 1). This is the comparison helper standing in for the g_0 sentinel.
bool gap_drop(const Partition& p, int r);

/// Largest part minus number of parts; 0 for the empty partition.
long rank_of(const Partition& p);

/// Largest part when the partition has no 1's, otherwise
/// (#parts greater than the number of 1's) minus (number of 1's).
long crank_of(const Partition& p);

struct PartitionStatistics {
    std::map<int, long> least_gap; // r -> g_r, for r = 1..r_max
    long rank = 0;
    long crank = 0;
    long omega = 0;   // number of 1's
    long mu = 0;      // number of parts greater than omega
    long largest = 0;
};

/// One-pass statistics record; least_gap is filled for r = 1..r_max.
PartitionStatistics statistics(const Partition& p, int r_max);

/// Streams every partition of n exactly once in decreasing lexicographic
/// order: n; (n-1)+1; ...; 1+1+...+1. Single consumer per stream; the pointer
/// returned by next() refers to internal storage valid until the next call.
class PartitionStream {
public:
    explicit PartitionStream(long n);
    const Partition* next();

private:
    Partition current_;
    long n_;
    bool started_ = false;
    bool done_ = false;
};

/// Range adapter over PartitionStream, for range-for loops.
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        iterator(PartitionStream* s, const Partition* cur) : stream_(s), cur_(cur) {}
        reference operator*() const { return *cur_; }
        pointer operator->() const { return cur_; }
        iterator& operator++() {
            cur_ = stream_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return cur_ == nullptr; }

    private:
        PartitionStream* stream_ = nullptr;
        const Partition* cur_ = nullptr;
    };

    explicit PartitionRange(long n) : stream_(n) {}
    PartitionRange(const PartitionRange&) = delete;
    PartitionRange& operator=(const PartitionRange&) = delete;

    iterator begin() { return iterator(&stream_, stream_.next()); }
    std::default_sentinel_t end() const { return {}; }

private:
    PartitionStream stream_;
};

inline PartitionRange partitions_of(long n) { return PartitionRange(n); }

} // namespace qgaps
