#pragma once

#include "ilp/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ilp {

/// Closed bounded rational interval [lo, hi]. Construction with lo > hi
/// is a hard error; degenerate intervals (lo == hi) represent crisp
/// coefficients.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational lo, Rational hi);
    /// Degenerate interval [v, v].
    explicit Interval(Rational value) : lo_(value), hi_(std::move(value)) {}

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool is_degenerate() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

    Rational center() const { return (lo_ + hi_) / 2; }
    Rational radius() const { return (hi_ - lo_) / 2; }

    /// The interval {-x : x in this}, i.e. [-hi, -lo].
    Interval negated() const { return Interval(-hi_, -lo_); }

    bool intersects(const Interval& other) const {
        return lo_ <= other.hi_ && other.lo_ <= hi_;
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_;
    Rational hi_;
};

std::string to_string(const Interval& iv);

using IntervalVector = std::vector<Interval>;

/// Dense m x n interval matrix, dimensions fixed at construction.
class IntervalMatrix {
public:
    IntervalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Interval& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Interval& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntervalVector row(std::size_t i) const {
        return IntervalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    IntervalVector data_;
};

RationalVector center(const IntervalVector& v);
RationalVector radius(const IntervalVector& v);
std::vector<RationalVector> center(const IntervalMatrix& m);
std::vector<RationalVector> radius(const IntervalMatrix& m);

/// Exact range of a^T x over all a in the interval vector. Exact because
/// the entries of a vary independently of each other.
Interval interval_dot_range(const IntervalVector& a, const RationalVector& x);

Rational dot(const RationalVector& a, const RationalVector& x);

/// Enumerates every assignment that fixes each interval at an endpoint.
/// Degenerate intervals contribute their single value (factor 1, not 2),
/// so the assignment count is exactly 2^K for K non-degenerate entries.
///
/// Order is deterministic: assignment index m picks, for the j-th
/// non-degenerate interval, hi when bit (K-1-j) of m is set, lo
/// otherwise. Earlier intervals therefore vary slowest.
class EndpointEnumerator {
public:
    /// Throws CapExceeded when 2^K would exceed cap.
    explicit EndpointEnumerator(IntervalVector intervals, std::uint64_t cap = kDefaultCap);

    std::uint64_t count() const { return count_; }
    std::size_t free_entries() const { return nondegenerate_.size(); }

    RationalVector assignment(std::uint64_t index) const;

    /// Calls fn for every assignment in enumeration order.
    void for_each(const std::function<void(std::uint64_t, const RationalVector&)>& fn) const;

    static constexpr std::uint64_t kDefaultCap = 256;

private:
    IntervalVector intervals_;
    std::vector<std::size_t> nondegenerate_;
    std::uint64_t count_;
};

} // namespace ilp
