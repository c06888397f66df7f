#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmg/domains.hpp"
#include "wmg/majorant.hpp"

namespace wmg {

/// A mapping f from a domain into R^m. Complex-analytic built-ins act on the
/// unit disk through real 2-vectors; (1-z)^alpha and log(1-z) use the
/// principal branch, whose cut [1, inf) never meets the open disk.
class Mapping {
public:
    enum class Kind { power_alpha, monomial, log_branch, affine, user };

    static Mapping power_alpha(double alpha);  // z -> (1-z)^alpha on the unit disk
    static Mapping monomial(int k);            // z -> z^k on the unit disk
    static Mapping log_branch();               // z -> log(1-z) on the unit disk
    static Mapping affine(const std::vector<std::vector<double>>& a, const Point& b,
                          DomainPtr source);
    static Mapping user(DomainPtr source, std::function<Point(const Point&)> f,
                        std::function<double(const Point&)> derivative_norm,
                        std::string name, bool bounded_analytic = false);

    /// f(x); x must lie in the source domain.
    Point evaluate(const Point& x) const;

    bool has_derivative_oracle() const { return static_cast<bool>(dnorm_); }

    /// Operator norm of the differential at x (analytic built-ins and affine
    /// maps); throws precondition_error when no oracle exists.
    double derivative_norm(const Point& x) const;

    /// c*f with the oracle scaled accordingly.
    Mapping scaled(double c) const;

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const Domain& source() const { return *source_; }
    DomainPtr source_ptr() const { return source_; }
    /// True for the disk built-ins covered by the Schwarz-lemma argument.
    bool bounded_analytic() const { return bounded_analytic_; }
    double alpha() const { return alpha_; }
    int degree() const { return degree_; }

private:
    Mapping(DomainPtr source, Kind kind) : source_(std::move(source)), kind_(kind) {}

    DomainPtr source_;
    Kind kind_;
    std::function<Point(const Point&)> fn_;
    std::function<double(const Point&)> dnorm_;
    std::string name_;
    bool bounded_analytic_ = false;
    double alpha_ = 0.0;
    int degree_ = 0;
};

/// Compiled-in registry for extra mappings selectable from configs by name.
void register_user_mapping(const std::string& name, std::function<Mapping()> factory);
Mapping make_registered_mapping(const std::string& name);
std::vector<std::string> registered_mapping_names();

struct DstarEstimate {
    double value = 0.0;
    /// |value - derivative_norm(x)| / max(oracle, 1e-12), when an oracle exists.
    std::optional<double> oracle_rel_deviation;
};

/// Max of per-sample ratios actually computed; always a LOWER bound for the
/// true supremum it estimates.
struct NormEstimate {
    double value = 0.0;
    std::vector<Point> witness;        // attaining point (or pair, for holder)
    std::size_t samples_used = 0;
    std::string parameters;            // radii / direction / shell settings used
    std::size_t skipped_coincident = 0;
    bool unbounded_flag = false;       // ro: zero sampled oscillation with D* > 0
};

/// Default probe radii {1e-3, 1e-4} * boundary_distance(x), floored at
/// {1e-6, 1e-7} so cancellation stays below the 1e-3 agreement target.
std::vector<double> dstar_default_radii(const Domain& source, const Point& x);
int dstar_default_directions(int dim);  // 64 in 2-d, 256 in 3-d

/// limsup proxy for D*f(x): difference quotients along a fixed direction set
/// at the two smallest radii, extrapolated linearly to radius zero per
/// direction, then maxed. The same directions at both radii make the
/// intercept immune to the direction-grid discretization.
DstarEstimate dstar_estimate(const Mapping& f, const Point& x,
                             const std::vector<double>& radii, int samples_per_radius);
DstarEstimate dstar_estimate(const Mapping& f, const Point& x);

/// sup over the points of dstar / w.
NormEstimate bloch_norm_estimate(const Mapping& f, const Weight& w,
                                 const std::vector<Point>& points);

/// sup over the pairs of ||f(x)-f(y)|| / phi(||x-y||).
NormEstimate holder_norm_estimate(const Mapping& f, const Majorant& phi,
                                  const std::vector<std::pair<Point, Point>>& pairs);

/// sup over points x and fractions q (r = q*w(x)) of
/// r * D*f(x) / sup_{sampled ball B(x,r)} ||f(y)-f(x)||.
NormEstimate ro_constant_estimate(const Mapping& f, const Weight& w,
                                  const std::vector<Point>& points,
                                  const std::vector<double>& radius_fractions);

} // namespace wmg
