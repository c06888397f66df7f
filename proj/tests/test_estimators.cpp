#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "wmg/errors.hpp"
#include "wmg/estimators.hpp"
#include "wmg/sampling.hpp"

using namespace wmg;
using doctest::Approx;

namespace {

Mapping bump_mapping(const Point& center, double t) {
    auto disk = make_unit_disk();
    return Mapping::user(
        disk,
        [center, t](const Point& y) {
            const Point d = y - center;
            if (d.norm() < t) return d;
            return Point::zero(2);
        },
        nullptr, "bump");
}

} // namespace

TEST_CASE("dstar matches the derivative oracle at hand-picked points") {
    auto m2 = Mapping::monomial(2);
    auto r = dstar_estimate(m2, Point{0.5, 0.0});
    CHECK(r.value == Approx(1.0).epsilon(1e-3));
    REQUIRE(r.oracle_rel_deviation.has_value());
    CHECK(*r.oracle_rel_deviation <= 1e-3);

    auto pa = Mapping::power_alpha(0.5);
    auto rp = dstar_estimate(pa, Point{0.0, 0.0});
    CHECK(rp.value == Approx(0.5).epsilon(1e-3));

    auto at_zero = dstar_estimate(m2, Point{0.0, 0.0});
    CHECK(at_zero.value <= 1e-10);  // critical point: the quotient decays linearly
}

TEST_CASE("dstar for an isotropic affine map is the scale factor") {
    std::vector<std::vector<double>> a{{2.0, 0.0}, {0.0, 2.0}};
    auto f = Mapping::affine(a, Point{0.3, -0.7}, make_unit_disk());
    CHECK(f.derivative_norm(Point{0.1, 0.1}) == 2.0);
    auto r = dstar_estimate(f, Point{0.1, 0.1});
    CHECK(std::abs(r.value - 2.0) <= 1e-12);
}

TEST_CASE("dstar stays within 1e-3 of the oracle across sampled points") {
    auto disk = make_unit_disk();
    auto pts = sample_domain_points(*disk, 25, 11, 0.05);
    for (const auto& f : {Mapping::monomial(2), Mapping::power_alpha(0.5), Mapping::log_branch()}) {
        for (const auto& x : pts) {
            auto r = dstar_estimate(f, x);
            REQUIRE(r.oracle_rel_deviation.has_value());
            CHECK(*r.oracle_rel_deviation <= 1e-3);
        }
    }
}

TEST_CASE("anisotropic affine map: oracle is the top singular value") {
    std::vector<std::vector<double>> a{{3.0, 4.0}};
    auto rect = make_rectangle(Point{-1.0, -1.0}, Point{1.0, 1.0});
    auto f = Mapping::affine(a, Point{0.0}, rect);
    CHECK(f.derivative_norm(Point{0.0, 0.0}) == Approx(5.0).epsilon(1e-12));
    auto r = dstar_estimate(f, Point{0.0, 0.0});
    CHECK(r.value == Approx(5.0).epsilon(2e-3));  // direction grid, not radius, limits this one
}

TEST_CASE("dstar validation and preconditions") {
    auto m = Mapping::monomial(2);
    CHECK_THROWS_AS((void)dstar_estimate(m, Point{0.9, 0.0}, {0.2, 0.01}, 8), precondition_error);
    CHECK_THROWS_AS((void)dstar_estimate(m, Point{0.0, 0.0}, {1e-3, 1e-8}, 8), precondition_error);
    CHECK_THROWS_AS((void)dstar_estimate(m, Point{0.0, 0.0}, {1e-4, 1e-3}, 8), invalid_input_error);
    CHECK_THROWS_AS((void)dstar_estimate(m, Point{0.0, 0.0}, {}, 8), invalid_input_error);
    CHECK_THROWS_AS((void)dstar_estimate(m, Point{0.0, 0.0}, {1e-3, 1e-4}, 0), invalid_input_error);
    CHECK_THROWS_AS((void)dstar_estimate(m, Point{2.0, 0.0}, {1e-3, 1e-4}, 8), domain_violation_error);

    auto single = dstar_estimate(Mapping::monomial(1), Point{0.2, 0.1}, {1e-3}, 16);
    CHECK(single.value == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mapping construction rejects bad parameters") {
    CHECK_THROWS_AS((void)Mapping::power_alpha(0.0), invalid_input_error);
    CHECK_THROWS_AS((void)Mapping::power_alpha(1.2), invalid_input_error);
    CHECK_THROWS_AS((void)Mapping::monomial(0), invalid_input_error);
    CHECK_THROWS_AS((void)Mapping::affine({{1.0, 2.0}, {3.0}}, Point{0.0, 0.0}, make_unit_disk()),
                    invalid_input_error);
    CHECK_THROWS_AS((void)Mapping::affine({{1.0}}, Point{0.0}, make_unit_disk()),
                    invalid_input_error);
    auto m = Mapping::monomial(2);
    CHECK_THROWS_AS((void)m.evaluate(Point{1.5, 0.0}), domain_violation_error);
    auto plain = Mapping::user(make_unit_disk(), [](const Point& p) { return p; }, nullptr, "id");
    CHECK_FALSE(plain.has_derivative_oracle());
    CHECK_THROWS_AS((void)plain.derivative_norm(Point{0.0, 0.0}), precondition_error);
}

TEST_CASE("built-in mapping values agree with complex arithmetic") {
    auto pa = Mapping::power_alpha(0.5);
    // (1 - 0.5i)^(1/2) via modulus/argument by hand
    const double r = std::sqrt(std::hypot(1.0, 0.5));
    const double th = 0.5 * std::atan2(-0.5, 1.0);
    Point v = pa.evaluate(Point{0.0, 0.5});
    CHECK(v[0] == Approx(r * std::cos(th)).epsilon(1e-15));
    CHECK(v[1] == Approx(r * std::sin(th)).epsilon(1e-15));

    auto m3 = Mapping::monomial(3);
    Point w = m3.evaluate(Point{0.3, 0.2});  // (0.3+0.2i)^3 = -0.009 + 0.046i
    CHECK(w[0] == Approx(0.3 * 0.3 * 0.3 - 3 * 0.3 * 0.2 * 0.2).epsilon(1e-12));
    CHECK(w[1] == Approx(3 * 0.3 * 0.3 * 0.2 - 0.2 * 0.2 * 0.2).epsilon(1e-12));

    auto lb = Mapping::log_branch();
    Point u = lb.evaluate(Point{0.5, 0.0});
    CHECK(u[0] == Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(u[1] == Approx(0.0));
    CHECK(lb.bounded_analytic() == false);
    CHECK(m3.bounded_analytic());
}

TEST_CASE("bloch norm of the identity against a unit weight is 1") {
    auto disk = make_unit_disk();
    auto f = Mapping::monomial(1);
    auto w = Weight::constant(disk, 1.0);
    auto pts = sample_domain_points(*disk, 40, 3, 0.05);
    auto est = bloch_norm_estimate(f, w, pts);
    CHECK(est.value == Approx(1.0).epsilon(1e-9));
    CHECK(est.samples_used == 40);
    REQUIRE(est.witness.size() == 1);
}

TEST_CASE("bloch norm of (1-z)^a against the matching weight peaks on the real axis") {
    auto disk = make_unit_disk();
    auto f = Mapping::power_alpha(0.5);
    auto w = Weight::dist_pow(disk, 0.5);
    std::vector<Point> pts{{0.0, 0.0}, {0.3, 0.0}, {0.6, 0.0}, {0.9, 0.0},
                           {0.2, 0.4}, {-0.5, 0.1}};
    auto est = bloch_norm_estimate(f, w, pts);
    // on the real axis |1-z| equals 1-|z|, so the ratio is exactly alpha there
    CHECK(est.value == Approx(0.5).epsilon(1e-3));
    REQUIRE(est.witness.size() == 1);
    CHECK(est.witness[0][1] == 0.0);
}

TEST_CASE("holder estimate: identity with the linear modulus, witness and skips") {
    auto f = Mapping::monomial(1);
    auto phi = Majorant::power(1.0);
    std::vector<std::pair<Point, Point>> pairs{
        {Point{0.1, 0.1}, Point{0.1, 0.1}},   // coincident, skipped
        {Point{0.2, 0.0}, Point{-0.3, 0.4}},
        {Point{0.0, 0.5}, Point{0.1, -0.2}},
    };
    auto est = holder_norm_estimate(f, phi, pairs);
    CHECK(est.value == Approx(1.0).epsilon(1e-14));
    CHECK(est.skipped_coincident == 1);
    CHECK(est.samples_used == 2);
    REQUIRE(est.witness.size() == 2);
}

TEST_CASE("holder estimate reproduces a hand-computed ratio") {
    auto f = Mapping::power_alpha(0.5);
    auto phi = Majorant::power(0.5);
    std::vector<std::pair<Point, Point>> pairs{{Point{0.9, 0.0}, Point{0.99, 0.0}}};
    auto est = holder_norm_estimate(f, phi, pairs);
    const double expect = (std::sqrt(0.1) - std::sqrt(0.01)) / std::sqrt(0.09);
    CHECK(est.value == Approx(expect).epsilon(1e-13));
}

TEST_CASE("ro constant: identity with the distance weight sits at 1") {
    auto disk = make_unit_disk();
    auto f = Mapping::monomial(1);
    auto w = Weight::dist(disk);
    auto pts = sample_domain_points(*disk, 20, 5, 0.2);
    auto est = ro_constant_estimate(f, w, pts, {0.5, 0.25});
    CHECK(est.value == Approx(1.0).epsilon(0.01));
    CHECK_FALSE(est.unbounded_flag);
}

TEST_CASE("ro constant of z^2 stays below 1 plus sampling slack") {
    auto disk = make_unit_disk();
    auto f = Mapping::monomial(2);
    auto w = Weight::dist(disk);
    auto pts = sample_domain_points(*disk, 30, 9, 0.2);
    auto est = ro_constant_estimate(f, w, pts, {0.5, 0.25});
    CHECK(est.value <= 1.02);
    CHECK(est.value >= 0.5);
}

TEST_CASE("ro constant flags zero sampled oscillation with positive dstar") {
    const Point x0{-0.2, 0.1};
    auto f = bump_mapping(x0, 1e-4);
    auto w = Weight::dist(make_unit_disk());
    CHECK(dstar_estimate(f, x0).value > 0.5);
    auto est = ro_constant_estimate(f, w, {x0}, {0.5});
    CHECK(est.unbounded_flag);
    CHECK(est.value == 0.0);
}

TEST_CASE("ro constant: constant maps give 0 without the flag") {
    auto disk = make_unit_disk();
    auto f = Mapping::user(disk, [](const Point&) { return Point{3.0, 4.0}; }, nullptr, "const");
    auto w = Weight::dist(disk);
    auto est = ro_constant_estimate(f, w, {Point{0.0, 0.0}, Point{0.3, 0.1}}, {0.5});
    CHECK(est.value == 0.0);
    CHECK_FALSE(est.unbounded_flag);
}

TEST_CASE("ro constant validation") {
    auto disk = make_unit_disk();
    auto f = Mapping::monomial(2);
    auto w = Weight::dist(disk);
    CHECK_THROWS_AS((void)ro_constant_estimate(f, w, {Point{0.0, 0.0}}, {0.5, 1.0}),
                    invalid_input_error);
    CHECK_THROWS_AS((void)ro_constant_estimate(f, w, {Point{0.0, 0.0}}, {}), invalid_input_error);
    CHECK_THROWS_AS((void)ro_constant_estimate(f, w, {}, {0.5}), invalid_input_error);
    auto big = Weight::constant(disk, 5.0);
    CHECK_THROWS_AS((void)ro_constant_estimate(f, big, {Point{0.0, 0.0}}, {0.5}),
                    precondition_error);
}

TEST_CASE("scaling a mapping by 2 scales the estimates exactly") {
    auto disk = make_unit_disk();
    auto f = Mapping::power_alpha(0.5);
    auto g = f.scaled(2.0);
    const Point x{0.3, -0.2};
    CHECK(dstar_estimate(g, x).value == 2.0 * dstar_estimate(f, x).value);

    auto w = Weight::dist_pow(disk, 0.5);
    auto pts = sample_domain_points(*disk, 15, 21, 0.05);
    CHECK(bloch_norm_estimate(g, w, pts).value == 2.0 * bloch_norm_estimate(f, w, pts).value);

    auto phi = Majorant::power(0.5);
    auto pairs = sample_domain_pairs(*disk, 20, 22, 0.05);
    CHECK(holder_norm_estimate(g, phi, pairs).value ==
          2.0 * holder_norm_estimate(f, phi, pairs).value);

    auto wd = Weight::dist(disk);
    auto ro_pts = sample_domain_points(*disk, 10, 23, 0.2);
    CHECK(ro_constant_estimate(g, wd, ro_pts, {0.5}).value ==
          ro_constant_estimate(f, wd, ro_pts, {0.5}).value);
}

TEST_CASE("estimates never decrease when samples grow") {
    auto disk = make_unit_disk();
    auto f = Mapping::power_alpha(0.5);
    auto phi = Majorant::power(0.5);
    auto many = sample_domain_pairs(*disk, 120, 31, 0.05);
    std::vector<std::pair<Point, Point>> few(many.begin(), many.begin() + 60);
    CHECK(holder_norm_estimate(f, phi, few).value <= holder_norm_estimate(f, phi, many).value);

    auto w = Weight::dist_pow(disk, 0.5);
    auto pts = sample_domain_points(*disk, 80, 32, 0.05);
    std::vector<Point> half(pts.begin(), pts.begin() + 40);
    CHECK(bloch_norm_estimate(f, w, half).value <= bloch_norm_estimate(f, w, pts).value);
}

TEST_CASE("user mapping registry") {
    register_user_mapping("cube", [] { return Mapping::monomial(3); });
    auto f = make_registered_mapping("cube");
    CHECK(f.degree() == 3);
    auto names = registered_mapping_names();
    CHECK(std::find(names.begin(), names.end(), "cube") != names.end());
    CHECK_THROWS_AS((void)make_registered_mapping("nope"), invalid_input_error);
}
