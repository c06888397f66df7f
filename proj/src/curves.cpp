#include "wmg/curves.hpp"

#include <algorithm>
#include <cmath>

namespace wmg {

Curve::Curve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw invalid_input_error("Curve: at least one vertex required");
    int d = vertices_.front().dim();
    for (const Point& v : vertices_)
        if (v.dim() != d)
            throw invalid_input_error("Curve: vertices of mixed dimension");
}

Curve Curve::reversed() const {
    std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
    return Curve(std::move(v));
}

double curve_length(const Curve& curve) {
    double len = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        len += distance(curve.vertices()[i - 1], curve.vertices()[i]);
    return len;
}

double segment_integral(const Weight& w, const Point& a, const Point& b, double tol) {
    if (!(tol > 0.0))
        throw invalid_input_error("segment_integral: tol must be positive");
    const double len = distance(a, b);
    if (len == 0.0) return 0.0;

    const int dim = a.dim();
    Point sample = a;  // scratch, reused for every evaluation

    // Composite midpoint sum with m = 2^depth panels. Midpoints of level d+1
    // do not reuse level-d values, so each level is evaluated afresh; the
    // doubling keeps total work within 2x of the last level.
    auto midpoint_sum = [&](long long m) {
        double acc = 0.0;
        const double dm = static_cast<double>(m);
        for (long long k = 0; k < m; ++k) {
            double t = (static_cast<double>(k) + 0.5) / dm;
            for (int i = 0; i < dim; ++i) sample[i] = a[i] + t * (b[i] - a[i]);
            acc += w.eval(sample);
        }
        return acc * len / dm;
    };

    double prev = midpoint_sum(1);
    for (int depth = 1;; ++depth) {
        double cur = midpoint_sum(1LL << depth);
        double scale = std::max({std::fabs(cur), std::fabs(prev), 1e-300});
        if (std::fabs(cur - prev) < tol * scale) return cur;
        if (depth == kMaxRefinementDepth)
            throw convergence_error("segment_integral: no convergence after " +
                                        std::to_string(kMaxRefinementDepth) + " refinements",
                                    prev, cur);
        prev = cur;
    }
}

double curve_integral(const Weight& w, const Curve& curve, double tol) {
    if (curve.dim() != w.domain().dimension())
        throw invalid_input_error("curve_integral: curve/weight dimension mismatch");
    for (const Point& v : curve.vertices())
        if (!w.domain().contains(v))
            throw domain_violation_error("curve_integral: vertex " + v.str() +
                                         " outside the weight's domain");
    double total = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        total += segment_integral(w, curve.vertices()[i - 1], curve.vertices()[i], tol);
    return total;
}

} // namespace wmg
