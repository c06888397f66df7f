#pragma once

#include <vector>

#include "wmg/domains.hpp"
#include "wmg/geometry.hpp"

namespace wmg {

/// A polyline in R^n. Polylines realize their own partition supremum, so the
/// length is just the sum of consecutive vertex distances.
class Curve {
public:
    explicit Curve(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dim() const { return vertices_.front().dim(); }

    const Point& front() const { return vertices_.front(); }
    const Point& back() const { return vertices_.back(); }

    Curve reversed() const;

private:
    std::vector<Point> vertices_;
};

double curve_length(const Curve& curve);

inline constexpr double kDefaultIntegralTol = 1e-8;   // relative
inline constexpr int kMaxRefinementDepth = 24;        // halvings per edge

/// Integral of the weight along the polyline: midpoint Riemann sums with
/// per-edge dyadic refinement until successive refinements differ by < tol
/// relatively. Any sample point outside the weight's domain aborts with
/// domain_violation_error; exceeding the depth cap raises convergence_error
/// carrying the last two iterates.
double curve_integral(const Weight& w, const Curve& curve, double tol = kDefaultIntegralTol);

/// Same adaptive rule over the single segment [a, b]; the workhorse behind
/// curve_integral and the geodesic edge costs.
double segment_integral(const Weight& w, const Point& a, const Point& b,
                        double tol = kDefaultIntegralTol);

} // namespace wmg
