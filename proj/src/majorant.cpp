#include "wmg/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wmg/geometry.hpp"

namespace wmg {

namespace {

constexpr double kAxiomTol = 1e-9;  // relative

// Signed relative excess of lhs over rhs: positive means the inequality
// lhs <= rhs is violated by that relative amount.
double rel_excess(double lhs, double rhs) {
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
    return (lhs - rhs) / scale;
}

struct Accumulator {
    double worst = -std::numeric_limits<double>::infinity();
    void add(double v) { worst = std::max(worst, v); }
    AxiomCheck done(std::string name) const {
        return AxiomCheck{std::move(name), worst <= kAxiomTol, worst};
    }
};

} // namespace

Majorant Majorant::power(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw invalid_input_error("Majorant::power: alpha must lie in (0, 1]");
    Majorant m;
    m.kind_ = Kind::power;
    m.alpha_ = alpha;
    m.name_ = "power(" + format_double(alpha) + ")";
    return m;
}

Majorant Majorant::user(std::function<double(double)> phi,
                        std::function<double(double)> dphi,
                        std::string name) {
    if (!phi || !dphi)
        throw invalid_input_error("Majorant::user: both phi and phi' are required");
    Majorant m;
    m.kind_ = Kind::user;
    m.phi_ = std::move(phi);
    m.dphi_ = std::move(dphi);
    m.name_ = std::move(name);
    return m;
}

double Majorant::eval(double t) const {
    if (t < 0.0)
        throw invalid_input_error("Majorant::eval: t must be >= 0");
    if (kind_ == Kind::power) return std::pow(t, alpha_);
    return phi_(t);
}

double Majorant::deriv(double t) const {
    if (!(t > 0.0))
        throw invalid_input_error("Majorant::deriv: t must be > 0");
    // alpha * phi(t)/t == alpha * t^(alpha-1); phrased this way the ratio
    // (phi/t)/phi' used by condition (A) comes out as exactly 1/alpha.
    if (kind_ == Kind::power) return alpha_ * eval(t) / t;
    return dphi_(t);
}

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw invalid_input_error("AxiomReport: no check named '" + name + "'");
}

AxiomReport check_majorant_axioms(const Majorant& phi, const std::vector<double>& grid) {
    if (grid.empty())
        throw invalid_input_error("check_majorant_axioms: grid must be nonempty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0))
            throw invalid_input_error("check_majorant_axioms: non-positive grid entry");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw invalid_input_error("check_majorant_axioms: grid must be strictly increasing");
    }

    const std::size_t n = grid.size();
    std::vector<double> f(n), df(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = phi.eval(grid[i]);
        df[i] = phi.deriv(grid[i]);
    }

    AxiomReport report;
    report.grid = grid;
    report.tolerance = kAxiomTol;

    // (1) phi(0) = 0 and phi > 0 on the grid.
    {
        Accumulator acc;
        acc.add(rel_excess(std::fabs(phi.eval(0.0)), 0.0));
        for (std::size_t i = 0; i < n; ++i)
            acc.add(rel_excess(0.0, f[i]));  // wants 0 < f[i]
        report.checks.push_back(acc.done("1"));
    }
    // (2) phi nondecreasing: f[i] <= f[j] for all i < j.
    {
        Accumulator acc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                acc.add(rel_excess(f[i], f[j]));
        report.checks.push_back(acc.done("2"));
    }
    // (3) phi' nonincreasing: df[j] <= df[i] for all i < j.
    {
        Accumulator acc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                acc.add(rel_excess(df[j], df[i]));
        report.checks.push_back(acc.done("3"));
    }
    // (a) phi'(t) <= phi(t)/t.
    {
        Accumulator acc;
        for (std::size_t i = 0; i < n; ++i)
            acc.add(rel_excess(df[i], f[i] / grid[i]));
        report.checks.push_back(acc.done("a"));
    }
    // (b) phi(t)/t nonincreasing.
    {
        Accumulator acc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                acc.add(rel_excess(f[j] / grid[j], f[i] / grid[i]));
        report.checks.push_back(acc.done("b"));
    }
    // (c) phi(ct) <= c phi(t) at fixed sample factors.
    {
        Accumulator acc;
        for (double c : {1.5, 2.0, 10.0})
            for (std::size_t i = 0; i < n; ++i)
                acc.add(rel_excess(phi.eval(c * grid[i]), c * f[i]));
        report.checks.push_back(acc.done("c"));
    }
    // (d) subadditivity on all grid pairs.
    {
        Accumulator acc;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                acc.add(rel_excess(phi.eval(grid[i] + grid[j]), f[i] + f[j]));
        report.checks.push_back(acc.done("d"));
    }
    // phi' vs central differences, relative tolerance 1e-4. The step shrinks
    // with t so the truncation error ~ (step/t)^2 stays far below tolerance
    // even for strongly concave phi near zero.
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double t = grid[i];
            double step = std::min(1e-6, t / 128.0);
            double fd = (phi.eval(t + step) - phi.eval(t - step)) / (2.0 * step);
            double dev = std::fabs(fd - df[i]) / std::max({std::fabs(df[i]), std::fabs(fd), 1e-300});
            worst = std::max(worst, dev);
        }
        report.checks.push_back(AxiomCheck{"deriv-consistency", worst <= 1e-4, worst});
    }

    return report;
}

ConditionAReport check_condition_A(const Majorant& phi, double A, const std::vector<double>& grid) {
    if (grid.empty())
        throw invalid_input_error("check_condition_A: grid must be nonempty");
    if (!(A > 0.0))
        throw invalid_input_error("check_condition_A: A must be positive");

    ConditionAReport report;
    report.holds = true;
    report.worst_ratio = -std::numeric_limits<double>::infinity();
    for (double t : grid) {
        if (!(t > 0.0))
            throw invalid_input_error("check_condition_A: non-positive grid entry");
        double d = phi.deriv(t);
        if (!(d > 0.0))
            throw degenerate_majorant_error("check_condition_A: phi'(t) <= 0 at t = " +
                                            std::to_string(t));
        double ratio = (phi.eval(t) / t) / d;
        if (ratio > report.worst_ratio) {
            report.worst_ratio = ratio;
            report.worst_t = t;
        }
        if (!(ratio < A)) report.holds = false;
    }
    return report;
}

} // namespace wmg
