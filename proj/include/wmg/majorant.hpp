#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wmg/errors.hpp"

namespace wmg {

/// A candidate majorant: a scalar function phi on [0,inf) together with its
/// derivative on (0,inf). "Candidate" because user-supplied functions may
/// violate the majorant axioms; check_majorant_axioms is the judge.
///
/// The derivative is never evaluated at 0 (for powers t^alpha it blows up
/// there, and no convention at 0 is assumed).
class Majorant {
public:
    enum class Kind { power, user };

    /// The standard power majorant t^alpha, alpha in (0, 1].
    static Majorant power(double alpha);

    /// User-supplied phi and phi'. Both are callables; phi' is later checked
    /// against central differences by check_majorant_axioms.
    static Majorant user(std::function<double(double)> phi,
                         std::function<double(double)> dphi,
                         std::string name = "user");

    double eval(double t) const;

    /// phi'(t), t > 0.
    double deriv(double t) const;

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }  // meaningful for Kind::power only
    const std::string& name() const { return name_; }

private:
    Majorant() = default;

    Kind kind_ = Kind::user;
    double alpha_ = 0.0;
    std::function<double(double)> phi_;
    std::function<double(double)> dphi_;
    std::string name_;
};

struct AxiomCheck {
    std::string name;       // "1", "2", "3", "a", "b", "c", "d", "deriv-consistency"
    bool pass = false;
    double worst_violation = 0.0;  // signed relative excess; <= tolerance means pass
};

/// Grid-based verdicts for the majorant axioms. Checks are evaluated
/// pointwise on the recorded grid; they refute, they do not prove.
struct AxiomReport {
    std::vector<AxiomCheck> checks;
    std::vector<double> grid;
    double tolerance = 0.0;

    bool all_pass() const;
    const AxiomCheck& check(const std::string& name) const;
};

struct ConditionAReport {
    bool holds = false;       // phi(t)/t < A * phi'(t) strictly at every grid point
    double worst_ratio = 0.0; // max over the grid of (phi(t)/t) / phi'(t)
    double worst_t = 0.0;
};

/// Tests properties (1)-(3) and the derived (a)-(d) on a finite grid:
///   (1) phi(0) = 0, phi(t) > 0
///   (2) phi nondecreasing          (3) phi' nonincreasing
///   (a) phi'(t) <= phi(t)/t        (b) phi(t)/t nonincreasing
///   (c) phi(ct) <= c phi(t), c in {1.5, 2, 10}
///   (d) phi(t+s) <= phi(t) + phi(s) on all grid pairs
/// Monotonicity checks run over all ordered grid pairs, so a failure found on
/// a grid persists on every refinement containing the failing points.
AxiomReport check_majorant_axioms(const Majorant& phi, const std::vector<double>& grid);

/// True iff phi(t)/t < A phi'(t) strictly at every grid point.
ConditionAReport check_condition_A(const Majorant& phi, double A, const std::vector<double>& grid);

} // namespace wmg
