#include "wmg/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace wmg {

namespace {

class UnitBall : public Domain {
public:
    explicit UnitBall(int dim) : dim_(dim) {
        if (dim < 1) throw invalid_input_error("unit ball: dimension must be >= 1");
    }

    int dimension() const override { return dim_; }

    bool contains(const Point& p) const override {
        return p.dim() == dim_ && p.norm() < 1.0;
    }

    double boundary_distance(const Point& p) const override {
        require_inside(p);
        return 1.0 - p.norm();
    }

    std::optional<Box> bounding_box() const override {
        Point lo = Point::zero(dim_), hi = Point::zero(dim_);
        for (int i = 0; i < dim_; ++i) { lo[i] = -1.0; hi[i] = 1.0; }
        return Box{lo, hi};
    }

    std::string kind() const override { return dim_ == 2 ? "unit-disk" : "unit-ball"; }

private:
    int dim_;
};

class HalfPlane : public Domain {
public:
    int dimension() const override { return 2; }

    bool contains(const Point& p) const override { return p.dim() == 2 && p[1] > 0.0; }

    double boundary_distance(const Point& p) const override {
        require_inside(p);
        return p[1];
    }

    std::optional<Box> bounding_box() const override { return std::nullopt; }

    std::string kind() const override { return "half-plane"; }
};

class Rectangle : public Domain {
public:
    Rectangle(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.dim() != hi_.dim())
            throw invalid_input_error("rectangle: corner dimensions differ");
        for (int i = 0; i < lo_.dim(); ++i)
            if (!(lo_[i] < hi_[i]))
                throw invalid_input_error("rectangle: lo must be strictly below hi");
    }

    int dimension() const override { return lo_.dim(); }

    bool contains(const Point& p) const override {
        if (p.dim() != lo_.dim()) return false;
        for (int i = 0; i < p.dim(); ++i)
            if (!(p[i] > lo_[i] && p[i] < hi_[i])) return false;
        return true;
    }

    double boundary_distance(const Point& p) const override {
        require_inside(p);
        double d = std::numeric_limits<double>::infinity();
        for (int i = 0; i < p.dim(); ++i)
            d = std::min({d, p[i] - lo_[i], hi_[i] - p[i]});
        return d;
    }

    std::optional<Box> bounding_box() const override { return Box{lo_, hi_}; }

    std::string kind() const override { return "rectangle"; }

private:
    Point lo_, hi_;
};

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    double abab = 0.0, abap = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
        double ab = b[i] - a[i];
        abab += ab * ab;
        abap += ab * (p[i] - a[i]);
    }
    double t = abab > 0.0 ? std::clamp(abap / abab, 0.0, 1.0) : 0.0;
    double s = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
        double d = p[i] - (a[i] + t * (b[i] - a[i]));
        s += d * d;
    }
    return std::sqrt(s);
}

// Closed-box vs segment intersection by slab clipping. Touching an edge or a
// corner counts as intersecting, which is exactly what an open domain needs.
bool segment_meets_box(const Point& a, const Point& b, const Point& blo, const Point& bhi) {
    double t0 = 0.0, t1 = 1.0;
    for (int c = 0; c < a.dim(); ++c) {
        double d = b[c] - a[c];
        if (d == 0.0) {
            if (a[c] < blo[c] || a[c] > bhi[c]) return false;
        } else {
            double ta = (blo[c] - a[c]) / d;
            double tb = (bhi[c] - a[c]) / d;
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
        }
    }
    return t0 <= t1;
}

// [-1,1]^2 minus the closed quadrant [0,1] x [-1,0]. The standard non-convex
// fixture: the straight chord between the two arms is infeasible and the
// inner distance runs through the reentrant corner at the origin.
class LShape : public Domain {
public:
    LShape() {
        const Point corners[7] = {
            {-1.0, -1.0}, {0.0, -1.0}, {0.0, 0.0}, {1.0, 0.0},
            {1.0, 1.0},   {-1.0, 1.0}, {-1.0, -1.0},
        };
        for (int i = 0; i < 6; ++i) edges_[i] = {corners[i], corners[i + 1]};
    }

    int dimension() const override { return 2; }

    bool contains(const Point& p) const override {
        if (p.dim() != 2) return false;
        bool in_square = p[0] > -1.0 && p[0] < 1.0 && p[1] > -1.0 && p[1] < 1.0;
        bool in_removed = p[0] >= 0.0 && p[1] <= 0.0;
        return in_square && !in_removed;
    }

    double boundary_distance(const Point& p) const override {
        require_inside(p);
        double d = std::numeric_limits<double>::infinity();
        for (const auto& e : edges_)
            d = std::min(d, point_segment_distance(p, e.first, e.second));
        return d;
    }

    std::optional<Box> bounding_box() const override {
        return Box{Point{-1.0, -1.0}, Point{1.0, 1.0}};
    }

    bool segment_inside(const Point& a, const Point& b) const override {
        return contains(a) && contains(b) &&
               !segment_meets_box(a, b, Point{0.0, -1.0}, Point{1.0, 0.0});
    }

    std::string kind() const override { return "L-shape"; }

private:
    std::pair<Point, Point> edges_[6];
};

class Annulus : public Domain {
public:
    Annulus(double inner, double outer) : inner_(inner), outer_(outer) {
        if (!(0.0 < inner && inner < outer))
            throw invalid_input_error("annulus: need 0 < inner < outer");
    }

    int dimension() const override { return 2; }

    bool contains(const Point& p) const override {
        if (p.dim() != 2) return false;
        double r = p.norm();
        return r > inner_ && r < outer_;
    }

    double boundary_distance(const Point& p) const override {
        require_inside(p);
        double r = p.norm();
        return std::min(r - inner_, outer_ - r);
    }

    std::optional<Box> bounding_box() const override {
        return Box{Point{-outer_, -outer_}, Point{outer_, outer_}};
    }

    bool segment_inside(const Point& a, const Point& b) const override {
        // |p(t)| is convex along the segment, so the outer circle is cleared
        // by the endpoints alone; the inner disk needs the min distance.
        static const Point origin{0.0, 0.0};
        return contains(a) && contains(b) &&
               point_segment_distance(origin, a, b) > inner_;
    }

    std::string kind() const override { return "annulus"; }

private:
    double inner_, outer_;
};

} // namespace

DomainPtr make_unit_disk() { return std::make_shared<UnitBall>(2); }
DomainPtr make_unit_ball(int dim) { return std::make_shared<UnitBall>(dim); }
DomainPtr make_half_plane() { return std::make_shared<HalfPlane>(); }
DomainPtr make_rectangle(const Point& lo, const Point& hi) {
    return std::make_shared<Rectangle>(lo, hi);
}
DomainPtr make_l_shape() { return std::make_shared<LShape>(); }
DomainPtr make_annulus(double inner, double outer) {
    return std::make_shared<Annulus>(inner, outer);
}

Weight Weight::constant(DomainPtr domain, double c) {
    if (!(c > 0.0)) throw invalid_input_error("Weight::constant: c must be positive");
    Weight w(std::move(domain), Kind::constant);
    w.value_ = c;
    w.name_ = "constant(" + format_double(c) + ")";
    return w;
}

Weight Weight::dist(DomainPtr domain) {
    Weight w(std::move(domain), Kind::dist);
    w.name_ = "dist";
    return w;
}

Weight Weight::dist_pow(DomainPtr domain, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw invalid_input_error("Weight::dist_pow: alpha must lie in (0, 1)");
    Weight w(std::move(domain), Kind::dist_pow);
    w.alpha_ = alpha;
    w.name_ = "dist_pow(alpha=" + format_double(alpha) + ")";
    return w;
}

Weight Weight::reciprocal_dist(DomainPtr domain) {
    Weight w(std::move(domain), Kind::reciprocal_dist);
    w.name_ = "reciprocal_dist";
    return w;
}

Weight Weight::user(DomainPtr domain, std::function<double(const Point&)> fn, std::string name) {
    if (!fn) throw invalid_input_error("Weight::user: callable required");
    Weight w(std::move(domain), Kind::user);
    w.fn_ = std::move(fn);
    w.name_ = std::move(name);
    return w;
}

double Weight::eval(const Point& p) const {
    switch (kind_) {
        case Kind::constant:
            if (!domain_->contains(p))
                throw domain_violation_error("Weight: point " + p.str() + " outside domain");
            return value_;
        case Kind::dist:
            return domain_->boundary_distance(p);
        case Kind::dist_pow:
            return std::pow(domain_->boundary_distance(p), alpha_ - 1.0);
        case Kind::reciprocal_dist:
            return 1.0 / domain_->boundary_distance(p);
        case Kind::user:
            if (!domain_->contains(p))
                throw domain_violation_error("Weight: point " + p.str() + " outside domain");
            return fn_(p);
    }
    throw invalid_input_error("Weight: unknown kind");
}

} // namespace wmg
