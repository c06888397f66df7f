// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here, not configurable.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wmg/config.hpp"
#include "wmg/estimators.hpp"
#include "wmg/geodesics.hpp"
#include "wmg/harness.hpp"
#include "wmg/majorant.hpp"
#include "wmg/report_io.hpp"
#include "wmg/sampling.hpp"

using namespace wmg;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// sup over the points of bd(z)^(1-alpha) |Df(z)|, via the oracle
double weighted_derivative_sup(const Mapping& f, double alpha, const std::vector<Point>& points) {
    double best = 0.0;
    for (const auto& z : points) {
        const double bd = f.source().boundary_distance(z);
        best = std::max(best, std::pow(bd, 1.0 - alpha) * f.derivative_norm(z));
    }
    return best;
}

void criterion_1_majorant_axioms() {
    const auto grid = log_grid(1e-6, 10.0, 50);
    bool ok = true;
    std::string detail;
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        const auto rep = check_majorant_axioms(Majorant::power(a), grid);
        if (!rep.all_pass()) {
            ok = false;
            detail += " t^" + num(a) + " unexpectedly fails;";
        }
    }
    const auto square = Majorant::user([](double t) { return t * t; },
                                       [](double t) { return 2.0 * t; }, "t^2");
    const auto rep = check_majorant_axioms(square, grid);
    if (rep.check("3").pass || rep.check("b").pass || rep.all_pass()) {
        ok = false;
        detail += " t^2 should fail (3) and (b);";
    }
    report(1, ok, "majorant axioms: t^alpha all pass, t^2 fails (3) and (b) on a 50-pt log grid" +
                      detail);
}

void criterion_2_convex_exactness() {
    const double tol = 0.01;
    auto disk = make_unit_disk();
    auto pairs = sample_domain_pairs(*disk, 100, 11, 0.02);
    GeodesicSolver solver(Weight::constant(disk, 1.0), 0.01);
    double worst = 0.0;
    for (const auto& [x, y] : pairs) {
        const double d = (x - y).norm();
        worst = std::max(worst, std::abs(solver.solve(x, y).value - d) / d);
    }
    report(2, worst <= tol,
           "unit weight on the disk: geodesic vs chord, worst rel err " + num(worst) +
               " <= " + num(tol) + " over 100 pairs at h=0.01");
}

void criterion_3_quasihyperbolic() {
    const double tol = 0.02;
    auto w = Weight::reciprocal_dist(make_half_plane());
    const Point a{0.0, 1.0}, b{0.0, std::exp(1.0)};
    std::vector<double> errs;
    for (double h : {0.02, 0.01, 0.005})
        errs.push_back(std::abs(weighted_distance_upper(w, a, b, h).value - 1.0));
    const bool ok = errs[0] <= tol && errs[1] <= errs[0] && errs[2] <= errs[1];
    report(3, ok,
           "half-plane 1/y benchmark: |d_w - 1| = " + num(errs[0]) + ", " + num(errs[1]) + ", " +
               num(errs[2]) + " at h=0.02,0.01,0.005 (<= " + num(tol) + ", nonincreasing)");
}

void criterion_4_extension_condition() {
    const double bound = 8.0;  // 4/alpha at alpha = 1/2
    auto disk = make_unit_disk();
    auto pairs = sample_domain_pairs(*disk, 200, 13, 0.02);
    auto rep = check_extension_condition(Weight::dist_pow(disk, 0.5), Majorant::power(0.5), pairs,
                                         0.01);
    report(4, rep.M_observed <= bound && !rep.divergence_suspected,
           "extension condition, w=d^(-1/2): M_observed " + num(rep.M_observed) + " <= " +
               num(bound) + " over 200 pairs at h=0.01");
}

void criterion_5_dstar_oracle() {
    const double tol = 1e-3;
    auto disk = make_unit_disk();
    auto points = sample_domain_points(*disk, 100, 17, 0.02);
    const Mapping cases[] = {
        Mapping::monomial(2), Mapping::power_alpha(0.5),
        Mapping::affine({{2.0, 0.0}, {0.0, 2.0}}, Point{0.3, -0.2}, disk)};
    double worst = 0.0;
    for (const auto& f : cases)
        for (const auto& x : points)
            worst = std::max(worst, *dstar_estimate(f, x).oracle_rel_deviation);
    report(5, worst <= tol,
           "dstar vs derivative oracle: worst rel deviation " + num(worst) + " <= " + num(tol) +
               " (3 maps x 100 points)");
}

void criteria_6_7_constant_transfer() {
    const double min_slack = 0.98;
    const double ro_bound = 1.02;
    auto disk = make_unit_disk();
    auto pairs = sample_domain_pairs(*disk, 10000, 19, 1e-3);
    auto points = sample_domain_points(*disk, 10000, 23, 1e-3);
    double fwd_slack = 1e300, conv_slack = 1e300;
    std::string detail6, detail7;
    for (double a : {0.25, 0.5, 0.75}) {
        const auto f = Mapping::power_alpha(a);
        const auto phi = Majorant::power(a);
        const double holder = holder_norm_estimate(f, phi, pairs).value;
        const double c = weighted_derivative_sup(f, a, points);
        const double s6 = (4.0 / a) * c / holder;
        const double s7 = (2.0 / a) * holder / c;
        fwd_slack = std::min(fwd_slack, s6);
        conv_slack = std::min(conv_slack, s7);
        detail6 += " " + num(s6);
        detail7 += " " + num(s7);
    }
    report(6, fwd_slack >= min_slack,
           "forward bound C' <= (4/a) C for (1-z)^a: slack" + detail6 + " all >= " +
               num(min_slack) + " (1e4 pairs/points)");
    auto ro_points = sample_domain_points(*disk, 40, 29, 0.05);
    const auto ro =
        ro_constant_estimate(Mapping::monomial(2), Weight::dist(disk), ro_points, {0.5, 0.25});
    report(7, conv_slack >= min_slack && ro.value <= ro_bound && !ro.unbounded_flag,
           "converse bound C <= (2/a) C': slack" + detail7 + ", RO constant for z^2 " +
               num(ro.value) + " <= " + num(ro_bound));
}

void criterion_8_image_curve() {
    const double len_tol = 0.01;
    const auto f = Mapping::monomial(2);
    auto seg = verify_image_curve_lemma(f, Curve({Point{0.0, 0.0}, Point{0.5, 0.0}}));
    const double len_err = std::abs(seg.left - 0.25) / 0.25;
    bool all_hold = true;
    auto disk = make_unit_disk();
    for (int i = 0; i < 20; ++i) {
        auto pts = sample_domain_points(*disk, 2 + i % 4, 31 + i, 0.05);
        if (!verify_image_curve_lemma(f, Curve(pts)).passed()) all_hold = false;
    }
    report(8, len_err <= len_tol && all_hold,
           "image-curve lemma: |f(seg)| err " + num(len_err) + " <= " + num(len_tol) +
               ", bound holds on 20 random polylines");
}

void criterion_9_topology() {
    const double shrink = 1.5;
    auto brackets =
        topology_equivalence_ratio(Weight::dist(make_unit_disk()), Point{0.0, 0.0},
                                   {0.2, 0.1, 0.05}, 16);
    std::vector<double> widths;
    bool contain = true;
    for (const auto& b : brackets) {
        widths.push_back(std::max(b.max_ratio, 1.0) - std::min(b.min_ratio, 1.0));
        // ratios must close in on 1 from inside [1 - r, 1]
        if (b.min_ratio < 1.0 - b.r || b.max_ratio > 1.0 + 1e-6) contain = false;
    }
    const bool ok = contain && widths[1] * shrink <= widths[0] && widths[2] * shrink <= widths[1];
    report(9, ok,
           "topology brackets at r=0.2,0.1,0.05: widths " + num(widths[0]) + ", " +
               num(widths[1]) + ", " + num(widths[2]) + " shrink >= " + num(shrink) +
               "x per halving");
}

void criterion_10_negative_control() {
    const double probe_growth_min = 2.0;
    const double q_growth_min = 5.0;
    const auto f = Mapping::log_branch();
    const auto phi = Majorant::power(0.5);
    const double coarse = holder_boundary_probe(f, phi, 1e-2);
    const double fine = holder_boundary_probe(f, phi, 1e-4);
    const double probe_growth = fine / coarse;
    auto disk = make_unit_disk();
    auto points = sample_domain_points(*disk, 50, 37, 0.05);
    const auto prof = q_profile(f, Weight::dist(disk), phi, points);
    const double q_growth = prof.boundary_profile.at(3).max_q / prof.boundary_profile.at(1).max_q;
    report(10, probe_growth >= probe_growth_min && q_growth >= q_growth_min,
           "log(1-z) diverges: holder probe x" + num(probe_growth) + " >= " +
               num(probe_growth_min) + ", q profile x" + num(q_growth) + " >= " +
               num(q_growth_min) + " from bd 1e-2 to 1e-4");
}

void criterion_11_determinism() {
    const char* text =
        "seed = 42\nh = 0.05\n"
        "[domain]\nkind = disk\n"
        "[weight]\nkind = dist_pow\nalpha = 0.5\n"
        "[majorant]\nkind = power\nalpha = 0.5\n"
        "[mapping]\nkind = power_alpha\nalpha = 0.5\n"
        "[samples]\npoints = 60\npairs = 40\ngeodesic_pairs = 10\nmin_boundary_distance = 0.05\n";
    const std::string cfg = "/tmp/wmg_acceptance.ini";
    std::ofstream(cfg) << text;
    auto a = run_verify(cfg, "/tmp/wmg_acceptance_a");
    auto b = run_verify(cfg, "/tmp/wmg_acceptance_b");
    const std::string ja = slurp(a.json_path), jb = slurp(b.json_path);
    const bool ok = !ja.empty() && ja == jb && slurp(a.summary_path) == slurp(b.summary_path) &&
                    a.exit_code == 0 && b.exit_code == 0;
    report(11, ok, "verify is deterministic: two runs, byte-identical json and csv, exit 0");
}

} // namespace

int main() {
    criterion_1_majorant_axioms();
    criterion_2_convex_exactness();
    criterion_3_quasihyperbolic();
    criterion_4_extension_condition();
    criterion_5_dstar_oracle();
    criteria_6_7_constant_transfer();
    criterion_8_image_curve();
    criterion_9_topology();
    criterion_10_negative_control();
    criterion_11_determinism();
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
