#include "wmg/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "wmg/errors.hpp"
#include "wmg/sampling.hpp"

namespace wmg {

namespace {

void require_source_point(const Domain& d, const Point& x) {
    if (x.dim() != d.dimension())
        throw invalid_input_error("mapping input has dimension " + std::to_string(x.dim()) +
                                  ", expected " + std::to_string(d.dimension()));
    if (!d.contains(x))
        throw domain_violation_error("mapping evaluated outside its source domain at " + x.str());
}

// Largest singular value via power iteration on A^T A. Sizes here are tiny
// (n <= 4), so a fixed iteration budget with a slightly tilted start vector
// is plenty; the tilt avoids starts exactly orthogonal to the top space.
double operator_norm(const std::vector<std::vector<double>>& a) {
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) b[i][j] += a[k][i] * a[k][j];

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i);
    double nv = 0.0;
    for (double c : v) nv += c * c;
    nv = std::sqrt(nv);
    for (double& c : v) c /= nv;

    std::vector<double> bv(n);
    for (int iter = 0; iter < 500; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            bv[i] = 0.0;
            for (std::size_t j = 0; j < n; ++j) bv[i] += b[i][j] * v[j];
        }
        double norm = 0.0;
        for (double c : bv) norm += c * c;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = bv[i] / norm;
    }
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += b[i][j] * v[j];
        rayleigh += v[i] * row;
    }
    return std::sqrt(std::max(0.0, rayleigh));
}

std::map<std::string, std::function<Mapping()>>& registry() {
    static std::map<std::string, std::function<Mapping()>> reg;
    return reg;
}

} // namespace

Mapping Mapping::power_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0) || !std::isfinite(alpha))
        throw invalid_input_error("power_alpha exponent must lie in (0, 1]");
    Mapping f(make_unit_disk(), Kind::power_alpha);
    f.alpha_ = alpha;
    f.name_ = "power_alpha(" + format_double(alpha) + ")";
    f.bounded_analytic_ = true;
    f.fn_ = [alpha](const Point& z) {
        const double u = 1.0 - z[0], v = -z[1];
        const double r = std::hypot(u, v);
        const double th = alpha * std::atan2(v, u);
        const double ra = std::pow(r, alpha);
        return Point{ra * std::cos(th), ra * std::sin(th)};
    };
    f.dnorm_ = [alpha](const Point& z) {
        return alpha * std::pow(std::hypot(1.0 - z[0], z[1]), alpha - 1.0);
    };
    return f;
}

Mapping Mapping::monomial(int k) {
    if (k < 1) throw invalid_input_error("monomial degree must be >= 1");
    Mapping f(make_unit_disk(), Kind::monomial);
    f.degree_ = k;
    f.name_ = "monomial(" + std::to_string(k) + ")";
    f.bounded_analytic_ = true;
    f.fn_ = [k](const Point& z) {
        double re = 1.0, im = 0.0;
        for (int i = 0; i < k; ++i) {
            const double nre = re * z[0] - im * z[1];
            im = re * z[1] + im * z[0];
            re = nre;
        }
        return Point{re, im};
    };
    f.dnorm_ = [k](const Point& z) {
        return k * std::pow(std::hypot(z[0], z[1]), k - 1);
    };
    return f;
}

Mapping Mapping::log_branch() {
    Mapping f(make_unit_disk(), Kind::log_branch);
    f.name_ = "log_branch";
    f.fn_ = [](const Point& z) {
        const double u = 1.0 - z[0], v = -z[1];
        return Point{0.5 * std::log(u * u + v * v), std::atan2(v, u)};
    };
    f.dnorm_ = [](const Point& z) { return 1.0 / std::hypot(1.0 - z[0], z[1]); };
    return f;
}

Mapping Mapping::affine(const std::vector<std::vector<double>>& a, const Point& b,
                        DomainPtr source) {
    if (!source) throw invalid_input_error("affine mapping needs a source domain");
    if (a.empty() || a[0].empty()) throw invalid_input_error("affine matrix is empty");
    const std::size_t m = a.size(), n = a[0].size();
    for (const auto& row : a) {
        if (row.size() != n) throw invalid_input_error("affine matrix rows have unequal length");
        for (double c : row)
            if (!std::isfinite(c)) throw invalid_input_error("affine matrix entry is not finite");
    }
    if (n != static_cast<std::size_t>(source->dimension()))
        throw invalid_input_error("affine matrix width does not match the source dimension");
    if (static_cast<std::size_t>(b.dim()) != m)
        throw invalid_input_error("affine offset does not match the matrix height");

    Mapping f(std::move(source), Kind::affine);
    f.name_ = "affine";
    const double nrm = operator_norm(a);
    const int mi = static_cast<int>(m), ni = static_cast<int>(n);
    f.fn_ = [a, b, mi, ni](const Point& x) {
        std::vector<double> out(static_cast<std::size_t>(mi));
        for (int i = 0; i < mi; ++i) {
            double s = b[i];
            for (int j = 0; j < ni; ++j)
                s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[j];
            out[static_cast<std::size_t>(i)] = s;
        }
        return Point(out);
    };
    f.dnorm_ = [nrm](const Point&) { return nrm; };
    return f;
}

Mapping Mapping::user(DomainPtr source, std::function<Point(const Point&)> fn,
                      std::function<double(const Point&)> derivative_norm,
                      std::string name, bool bounded_analytic) {
    if (!source) throw invalid_input_error("user mapping needs a source domain");
    if (!fn) throw invalid_input_error("user mapping needs an evaluation function");
    Mapping f(std::move(source), Kind::user);
    f.fn_ = std::move(fn);
    f.dnorm_ = std::move(derivative_norm);
    f.name_ = std::move(name);
    f.bounded_analytic_ = bounded_analytic;
    return f;
}

Point Mapping::evaluate(const Point& x) const {
    require_source_point(*source_, x);
    return fn_(x);
}

double Mapping::derivative_norm(const Point& x) const {
    if (!dnorm_) throw precondition_error("mapping '" + name_ + "' has no derivative oracle");
    require_source_point(*source_, x);
    return dnorm_(x);
}

Mapping Mapping::scaled(double c) const {
    if (!std::isfinite(c)) throw invalid_input_error("scale factor must be finite");
    Mapping g(source_, Kind::user);
    g.name_ = format_double(c) + "*" + name_;
    g.bounded_analytic_ = bounded_analytic_;
    auto fn = fn_;
    g.fn_ = [fn, c](const Point& x) {
        Point y = fn(x);
        for (int i = 0; i < y.dim(); ++i) y[i] = c * y[i];
        return y;
    };
    if (dnorm_) {
        auto dn = dnorm_;
        const double ac = std::abs(c);
        g.dnorm_ = [dn, ac](const Point& x) { return ac * dn(x); };
    }
    return g;
}

void register_user_mapping(const std::string& name, std::function<Mapping()> factory) {
    if (!factory) throw invalid_input_error("mapping factory is empty");
    registry()[name] = std::move(factory);
}

Mapping make_registered_mapping(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw invalid_input_error("no registered mapping named '" + name + "'");
    return it->second();
}

std::vector<std::string> registered_mapping_names() {
    std::vector<std::string> names;
    for (const auto& [name, factory] : registry()) names.push_back(name);
    return names;
}

std::vector<double> dstar_default_radii(const Domain& source, const Point& x) {
    const double bd = source.boundary_distance(x);
    return {std::max(1e-3 * bd, 1e-6), std::max(1e-4 * bd, 1e-7)};
}

int dstar_default_directions(int dim) {
    switch (dim) {
        case 1: return 2;
        case 2: return 64;
        case 3: return 256;
        default: return 512;
    }
}

DstarEstimate dstar_estimate(const Mapping& f, const Point& x,
                             const std::vector<double>& radii, int samples_per_radius) {
    const Domain& dom = f.source();
    const double bd = dom.boundary_distance(x);
    if (radii.empty()) throw invalid_input_error("dstar_estimate needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !std::isfinite(radii[i]))
            throw invalid_input_error("dstar radii must be positive and finite");
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw invalid_input_error("dstar radii must be strictly decreasing");
    }
    if (radii.back() < 1e-7)
        throw precondition_error("smallest dstar radius is below 1e-7; quotients would drown in rounding");
    if (!(radii.front() < bd))
        throw precondition_error("dstar radius " + format_double(radii.front()) +
                                 " reaches past the boundary (distance " + format_double(bd) + ")");
    if (samples_per_radius < 1) throw invalid_input_error("samples_per_radius must be >= 1");

    const auto dirs = sphere_directions(x.dim(), samples_per_radius);
    const Point fx = f.evaluate(x);

    // Quotients grow affinely in the radius for smooth maps, so a linear fit
    // through the two smallest radii recovers the radius-zero limit; with one
    // radius we fall back to the raw max.
    double best = 0.0;
    if (radii.size() == 1) {
        const double r = radii[0];
        for (const auto& e : dirs) {
            const Point y = x + r * e;
            best = std::max(best, distance(f.evaluate(y), fx) / r);
        }
    } else {
        const double rl = radii[radii.size() - 2];
        const double rs = radii.back();
        if (rl - rs < 0.01 * rl)
            throw invalid_input_error("the two smallest dstar radii are too close to extrapolate");
        for (const auto& e : dirs) {
            const double ql = distance(f.evaluate(x + rl * e), fx) / rl;
            const double qs = distance(f.evaluate(x + rs * e), fx) / rs;
            const double intercept = qs + (qs - ql) * rs / (rl - rs);
            best = std::max(best, std::max(0.0, intercept));
        }
    }

    DstarEstimate out;
    out.value = best;
    if (f.has_derivative_oracle()) {
        const double oracle = f.derivative_norm(x);
        out.oracle_rel_deviation = std::abs(best - oracle) / std::max(std::abs(oracle), 1e-12);
    }
    return out;
}

DstarEstimate dstar_estimate(const Mapping& f, const Point& x) {
    return dstar_estimate(f, x, dstar_default_radii(f.source(), x),
                          dstar_default_directions(x.dim()));
}

NormEstimate bloch_norm_estimate(const Mapping& f, const Weight& w,
                                 const std::vector<Point>& points) {
    if (points.empty()) throw invalid_input_error("bloch_norm_estimate needs sample points");
    NormEstimate out;
    for (const Point& x : points) {
        const double wx = w.eval(x);
        if (!(wx > 0.0))
            throw precondition_error("weight is not positive at sample " + x.str());
        const double ratio = dstar_estimate(f, x).value / wx;
        if (ratio > out.value) {
            out.value = ratio;
            out.witness = {x};
        }
    }
    out.samples_used = points.size();
    std::ostringstream p;
    p << "radii={1e-3,1e-4}*bd, dirs=" << dstar_default_directions(f.source().dimension());
    out.parameters = p.str();
    return out;
}

NormEstimate holder_norm_estimate(const Mapping& f, const Majorant& phi,
                                  const std::vector<std::pair<Point, Point>>& pairs) {
    if (pairs.empty()) throw invalid_input_error("holder_norm_estimate needs sample pairs");
    NormEstimate out;
    for (const auto& [x, y] : pairs) {
        const double d = distance(x, y);
        if (d == 0.0) {
            ++out.skipped_coincident;
            continue;
        }
        const double denom = phi.eval(d);
        if (!(denom > 0.0))
            throw precondition_error("majorant vanishes at separation " + format_double(d));
        const double ratio = distance(f.evaluate(x), f.evaluate(y)) / denom;
        if (ratio > out.value) {
            out.value = ratio;
            out.witness = {x, y};
        }
        ++out.samples_used;
    }
    out.parameters = "modulus=" + phi.name();
    return out;
}

NormEstimate ro_constant_estimate(const Mapping& f, const Weight& w,
                                  const std::vector<Point>& points,
                                  const std::vector<double>& radius_fractions) {
    if (points.empty()) throw invalid_input_error("ro_constant_estimate needs sample points");
    if (radius_fractions.empty())
        throw invalid_input_error("ro_constant_estimate needs radius fractions");
    for (double q : radius_fractions)
        if (!(q > 0.0) || !(q < 1.0))
            throw invalid_input_error("radius fractions must lie strictly inside (0, 1)");

    const Domain& dom = f.source();
    const int dirs_count = dstar_default_directions(dom.dimension());
    const auto dirs = sphere_directions(dom.dimension(), dirs_count);
    static const double kShells[] = {1.0, 0.75, 0.5, 0.25};

    NormEstimate out;
    for (const Point& x : points) {
        const double bd = dom.boundary_distance(x);
        const double wx = w.eval(x);
        if (!(wx > 0.0))
            throw precondition_error("weight is not positive at sample " + x.str());
        const double dstar = dstar_estimate(f, x).value;
        const Point fx = f.evaluate(x);
        for (double q : radius_fractions) {
            const double r = q * wx;
            if (!(r < bd))
                throw precondition_error("oscillation ball of radius " + format_double(r) +
                                         " exits the domain at " + x.str());
            double osc = 0.0;
            for (const auto& e : dirs)
                for (double s : kShells)
                    osc = std::max(osc, distance(f.evaluate(x + (s * r) * e), fx));
            if (osc == 0.0) {
                if (dstar > 0.0) out.unbounded_flag = true;
                continue;
            }
            const double k = r * dstar / osc;
            if (k > out.value) {
                out.value = k;
                out.witness = {x};
            }
        }
    }
    out.samples_used = points.size();
    std::ostringstream p;
    p << "dirs=" << dirs_count << ", shells=4, fractions=" << radius_fractions.size();
    out.parameters = p.str();
    return out;
}

} // namespace wmg
