#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "wmg/geometry.hpp"

namespace wmg {

/// A connected open subset of R^n with a membership test and an exact
/// boundary-distance function. Only shapes with closed-form distance are
/// built in; everything downstream inherits its accuracy from d(., bdry).
class Domain {
public:
    virtual ~Domain() = default;

    virtual int dimension() const = 0;
    virtual bool contains(const Point& p) const = 0;

    /// Distance to the boundary; throws domain_violation_error outside.
    virtual double boundary_distance(const Point& p) const = 0;

    /// Bounding box, when the domain is bounded.
    virtual std::optional<Box> bounding_box() const = 0;

    /// Exact test that the closed segment [a, b] stays inside. The default
    /// covers the convex shapes (endpoints inside suffice); the L-shape and
    /// the annulus override it with closed-form obstacle tests. Sampling is
    /// never used here: grazing chords must not slip through.
    virtual bool segment_inside(const Point& a, const Point& b) const {
        return contains(a) && contains(b);
    }

    virtual std::string kind() const = 0;

protected:
    void require_inside(const Point& p) const {
        if (p.dim() != dimension())
            throw invalid_input_error("Domain '" + kind() + "': point has dimension " +
                                      std::to_string(p.dim()) + ", expected " +
                                      std::to_string(dimension()));
        if (!contains(p))
            throw domain_violation_error("Domain '" + kind() + "': point " + p.str() +
                                         " is outside");
    }
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr make_unit_disk();
DomainPtr make_unit_ball(int dim);
DomainPtr make_half_plane();  // { (x, y) : y > 0 }
DomainPtr make_rectangle(const Point& lo, const Point& hi);
DomainPtr make_l_shape();     // (-1,1)^2 minus the closed quadrant [0,1] x [-1,0]
DomainPtr make_annulus(double inner, double outer);

/// A positive continuous scalar field on a domain. Evaluation outside the
/// domain throws; curve integrals over curves that leave the domain are
/// rejected through exactly that mechanism.
class Weight {
public:
    enum class Kind { constant, dist, dist_pow, reciprocal_dist, user };

    static Weight constant(DomainPtr domain, double c);
    static Weight dist(DomainPtr domain);
    /// boundary_distance(x)^(alpha-1), alpha in (0,1); blows up at the boundary.
    static Weight dist_pow(DomainPtr domain, double alpha);
    static Weight reciprocal_dist(DomainPtr domain);  // quasi-hyperbolic weight 1/d
    static Weight user(DomainPtr domain, std::function<double(const Point&)> fn,
                       std::string name = "user");

    double eval(const Point& p) const;

    const Domain& domain() const { return *domain_; }
    DomainPtr domain_ptr() const { return domain_; }
    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    const std::string& name() const { return name_; }

private:
    Weight(DomainPtr d, Kind k) : domain_(std::move(d)), kind_(k) {}

    DomainPtr domain_;
    Kind kind_;
    double value_ = 1.0;  // constant kind
    double alpha_ = 0.0;  // dist_pow kind
    std::function<double(const Point&)> fn_;
    std::string name_;
};

} // namespace wmg
