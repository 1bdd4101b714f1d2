#pragma once

#include <algorithm>
#include <string>

#include "mahler/rational.hpp"

namespace mahler {

// Closed real interval with exact rational endpoints. All operations are
// outward-exact (no rounding), so enclosures are rigorous by construction.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rat point) : lo_(point), hi_(point) {}
    Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw DomainError("Interval: lo > hi");
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (lo_ + hi_) / 2; }

    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return contains(Rat(0)); }
    bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

    bool is_point() const { return lo_ == hi_; }

    Rat abs_hi() const { return std::max(abs(lo_), abs(hi_)); }
    Rat abs_lo() const {
        if (contains_zero()) return Rat(0);
        return lo_ > 0 ? lo_ : -hi_;
    }

    Interval operator-() const { return Interval(-hi_, -lo_); }

    Interval operator+(const Interval& o) const { return Interval(lo_ + o.lo_, hi_ + o.hi_); }
    Interval operator-(const Interval& o) const { return Interval(lo_ - o.hi_, hi_ - o.lo_); }

    Interval operator*(const Interval& o) const {
        Rat a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
        return Interval(std::min(std::min(a, b), std::min(c, d)),
                        std::max(std::max(a, b), std::max(c, d)));
    }

    Interval operator/(const Interval& o) const {
        if (o.contains_zero()) throw DomainError("Interval: division by interval containing zero");
        Rat a = lo_ / o.lo_, b = lo_ / o.hi_, c = hi_ / o.lo_, d = hi_ / o.hi_;
        return Interval(std::min(std::min(a, b), std::min(c, d)),
                        std::max(std::max(a, b), std::max(c, d)));
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    // Outward rounding to dyadic endpoints; keeps coefficient sizes bounded
    // in long evaluation chains while preserving the enclosure.
    Interval slim(long bits) const { return Interval(dyadic_floor(lo_, bits), dyadic_ceil(hi_, bits)); }

    Interval widened(const Rat& margin) const { return Interval(lo_ - margin, hi_ + margin); }

    Interval hull(const Interval& o) const {
        return Interval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
    }

    std::string to_string(unsigned digits = 12) const {
        return "[" + to_decimal(lo_, digits, Round::Down) + ", " + to_decimal(hi_, digits, Round::Up) + "]";
    }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Rat lo_, hi_;
};

// Rectangular complex enclosure.
class Box {
public:
    Box() = default;
    Box(Interval re, Interval im = Interval(Rat(0))) : re_(std::move(re)), im_(std::move(im)) {}
    static Box point(const Rat& re, const Rat& im = Rat(0)) { return Box(Interval(re), Interval(im)); }

    const Interval& re() const { return re_; }
    const Interval& im() const { return im_; }

    bool is_real() const { return im_.is_point() && im_.lo() == 0; }
    Rat width() const { return std::max(re_.width(), im_.width()); }

    bool contains(const Box& o) const { return re_.contains(o.re()) && im_.contains(o.im()); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool intersects(const Box& o) const { return re_.intersects(o.re()) && im_.intersects(o.im()); }

    Box operator-() const { return Box(-re_, -im_); }
    Box operator+(const Box& o) const { return Box(re_ + o.re_, im_ + o.im_); }
    Box operator-(const Box& o) const { return Box(re_ - o.re_, im_ - o.im_); }
    Box operator*(const Box& o) const {
        return Box(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Box& operator+=(const Box& o) { return *this = *this + o; }
    Box& operator*=(const Box& o) { return *this = *this * o; }

    Rat abs_upper(long bits = 64) const {
        Rat m = re_.abs_hi() * re_.abs_hi() + im_.abs_hi() * im_.abs_hi();
        return sqrt_upper(m, bits);
    }

    Rat abs_lower(long bits = 64) const {
        Rat m = re_.abs_lo() * re_.abs_lo() + im_.abs_lo() * im_.abs_lo();
        return sqrt_lower(m, bits);
    }

    Box slim(long bits) const { return Box(re_.slim(bits), im_.slim(bits)); }

    // Minkowski sum with the square enclosing the disk of radius r.
    Box pad(const Rat& r) const { return Box(re_.widened(r), im_.widened(r)); }

    std::string to_string(unsigned digits = 12) const {
        if (is_real()) return re_.to_string(digits);
        return re_.to_string(digits) + " + " + im_.to_string(digits) + "*i";
    }

private:
    Interval re_{Rat(0)};
    Interval im_{Rat(0)};
};

}  // namespace mahler
