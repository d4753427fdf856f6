#include "ilp/interval.hpp"

#include "ilp/errors.hpp"

#include <stdexcept>
#include <utility>

namespace ilp {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) {
        throw ParseError("interval bounds reversed: [" + ilp::to_string(lo_) + ", " +
                         ilp::to_string(hi_) + "]");
    }
}

std::string to_string(const Interval& iv) {
    if (iv.is_degenerate()) return to_string(iv.lo());
    return "[" + to_string(iv.lo()) + ", " + to_string(iv.hi()) + "]";
}

RationalVector center(const IntervalVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const Interval& iv : v) out.push_back(iv.center());
    return out;
}

RationalVector radius(const IntervalVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const Interval& iv : v) out.push_back(iv.radius());
    return out;
}

std::vector<RationalVector> center(const IntervalMatrix& m) {
    std::vector<RationalVector> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(center(m.row(i)));
    return out;
}

std::vector<RationalVector> radius(const IntervalMatrix& m) {
    std::vector<RationalVector> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(radius(m.row(i)));
    return out;
}

Interval interval_dot_range(const IntervalVector& a, const RationalVector& x) {
    if (a.size() != x.size()) {
        throw std::invalid_argument("interval_dot_range: dimension mismatch");
    }
    Rational lo = 0;
    Rational hi = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        Rational at_lo = a[j].lo() * x[j];
        Rational at_hi = a[j].hi() * x[j];
        if (at_lo <= at_hi) {
            lo += at_lo;
            hi += at_hi;
        } else {
            lo += at_hi;
            hi += at_lo;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Rational dot(const RationalVector& a, const RationalVector& x) {
    if (a.size() != x.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational sum = 0;
    for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * x[j];
    return sum;
}

EndpointEnumerator::EndpointEnumerator(IntervalVector intervals, std::uint64_t cap)
    : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (!intervals_[i].is_degenerate()) nondegenerate_.push_back(i);
    }
    if (nondegenerate_.size() >= 63) {
        throw CapExceeded(~std::uint64_t{0}, cap);
    }
    count_ = std::uint64_t{1} << nondegenerate_.size();
    if (count_ > cap) {
        throw CapExceeded(count_, cap);
    }
}

RationalVector EndpointEnumerator::assignment(std::uint64_t index) const {
    if (index >= count_) {
        throw std::out_of_range("EndpointEnumerator::assignment index out of range");
    }
    RationalVector values;
    values.reserve(intervals_.size());
    for (const Interval& iv : intervals_) values.push_back(iv.lo());
    const std::size_t k = nondegenerate_.size();
    for (std::size_t j = 0; j < k; ++j) {
        if ((index >> (k - 1 - j)) & 1u) {
            values[nondegenerate_[j]] = intervals_[nondegenerate_[j]].hi();
        }
    }
    return values;
}

void EndpointEnumerator::for_each(
    const std::function<void(std::uint64_t, const RationalVector&)>& fn) const {
    for (std::uint64_t m = 0; m < count_; ++m) {
        RationalVector values = assignment(m);
        fn(m, values);
    }
}

} // namespace ilp
