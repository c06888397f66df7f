#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wmg/errors.hpp"

namespace wmg {

/// A point of R^n. Dimension is carried by the coordinate vector; all
/// coordinates must be finite.
class Point {
public:
    Point() = default;

    Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }

    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

    static Point zero(int dim) { return Point(std::vector<double>(static_cast<std::size_t>(dim), 0.0)); }

    int dim() const { return static_cast<int>(coords_.size()); }

    double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }

    const std::vector<double>& coords() const { return coords_; }

    double norm() const {
        double s = 0.0;
        for (double c : coords_) s += c * c;
        return std::sqrt(s);
    }

    friend Point operator+(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
        return r;
    }

    friend Point operator-(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
        return r;
    }

    friend Point operator*(double c, const Point& a) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r[i] *= c;
        return r;
    }

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }

    std::string str() const;

private:
    void validate() const {
        if (coords_.empty())
            throw invalid_input_error("Point: dimension must be >= 1");
        for (double c : coords_)
            if (!std::isfinite(c))
                throw invalid_input_error("Point: non-finite coordinate");
    }

    std::vector<double> coords_;
};

inline double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Axis-aligned box, used to bound grids and rejection sampling.
struct Box {
    Point lo;
    Point hi;

    int dim() const { return lo.dim(); }

    bool contains(const Point& p) const {
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }

    Box inflated(double margin) const {
        Box b = *this;
        for (int i = 0; i < dim(); ++i) {
            b.lo[i] -= margin;
            b.hi[i] += margin;
        }
        return b;
    }
};

/// Shortest-roundtrip decimal rendering of a double. Locale-free and
/// deterministic, so serialized reports are byte-stable across runs.
std::string format_double(double v);

} // namespace wmg
