#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wmg/domains.hpp"

using namespace wmg;
using doctest::Approx;

TEST_CASE("unit disk membership and boundary distance") {
    auto d = make_unit_disk();
    CHECK(d->dimension() == 2);
    CHECK(d->contains(Point{0.0, 0.0}));
    CHECK(d->contains(Point{0.99, 0.0}));
    CHECK_FALSE(d->contains(Point{1.0, 0.0}));
    CHECK_FALSE(d->contains(Point{0.8, 0.8}));

    CHECK(d->boundary_distance(Point{0.0, 0.0}) == Approx(1.0));
    CHECK(d->boundary_distance(Point{0.5, 0.0}) == Approx(0.5));
    CHECK(d->boundary_distance(Point{0.3, 0.4}) == Approx(0.5));
    CHECK_THROWS_AS(d->boundary_distance(Point{2.0, 0.0}), domain_violation_error);

    auto box = d->bounding_box();
    REQUIRE(box.has_value());
    CHECK(box->lo[0] == Approx(-1.0));
    CHECK(box->hi[1] == Approx(1.0));
}

TEST_CASE("unit ball in 3-d") {
    auto b = make_unit_ball(3);
    CHECK(b->dimension() == 3);
    CHECK(b->kind() == "unit-ball");
    CHECK(b->boundary_distance(Point{0.2, 0.2, 0.2}) == Approx(1.0 - 0.2 * std::sqrt(3.0)));
    CHECK_THROWS_AS(make_unit_ball(0), invalid_input_error);
}

TEST_CASE("half plane is unbounded with bd(x,y) = y") {
    auto h = make_half_plane();
    CHECK(h->contains(Point{100.0, 0.001}));
    CHECK_FALSE(h->contains(Point{0.0, 0.0}));
    CHECK_FALSE(h->contains(Point{0.0, -1.0}));
    CHECK(h->boundary_distance(Point{-7.0, 0.25}) == Approx(0.25));
    CHECK_FALSE(h->bounding_box().has_value());
}

TEST_CASE("rectangle distances are min over the four sides") {
    auto r = make_rectangle(Point{0.0, 0.0}, Point{2.0, 1.0});
    CHECK(r->contains(Point{1.0, 0.5}));
    CHECK_FALSE(r->contains(Point{1.0, 1.0}));
    CHECK(r->boundary_distance(Point{1.0, 0.5}) == Approx(0.5));
    CHECK(r->boundary_distance(Point{0.1, 0.5}) == Approx(0.1));
    CHECK(r->boundary_distance(Point{1.9, 0.2}) == Approx(0.1));
    CHECK_THROWS_AS(make_rectangle(Point{0.0, 0.0}, Point{0.0, 1.0}), invalid_input_error);
}

TEST_CASE("L-shape excludes the closed lower-right quadrant") {
    auto l = make_l_shape();
    CHECK(l->contains(Point{-0.5, -0.5}));
    CHECK(l->contains(Point{0.5, 0.5}));
    CHECK(l->contains(Point{-0.5, 0.5}));
    CHECK_FALSE(l->contains(Point{0.5, -0.5}));  // removed quadrant
    CHECK_FALSE(l->contains(Point{0.0, -0.5}));  // its left edge is boundary
    CHECK_FALSE(l->contains(Point{0.5, 0.0}));   // its top edge is boundary

    CHECK(l->boundary_distance(Point{-0.5, 0.5}) == Approx(0.5));
    CHECK(l->boundary_distance(Point{0.5, 0.5}) == Approx(0.5));
    CHECK(l->boundary_distance(Point{-0.25, -0.25}) == Approx(0.25));
    // near the reentrant corner the closest boundary point is (0,0) itself
    CHECK(l->boundary_distance(Point{-0.1, 0.1}) == Approx(std::sqrt(0.02)));
}

TEST_CASE("annulus") {
    auto a = make_annulus(0.5, 1.0);
    CHECK(a->contains(Point{0.75, 0.0}));
    CHECK_FALSE(a->contains(Point{0.25, 0.0}));
    CHECK_FALSE(a->contains(Point{0.0, 0.0}));
    CHECK(a->boundary_distance(Point{0.75, 0.0}) == Approx(0.25));
    CHECK(a->boundary_distance(Point{0.0, 0.6}) == Approx(0.1));
    CHECK_THROWS_AS(make_annulus(1.0, 0.5), invalid_input_error);
    CHECK_THROWS_AS(make_annulus(-0.1, 0.5), invalid_input_error);
}

TEST_CASE("segment_inside is exact for the non-convex shapes") {
    auto l = make_l_shape();
    CHECK(l->segment_inside(Point{-0.5, -0.5}, Point{-0.5, 0.5}));
    CHECK(l->segment_inside(Point{-0.5, 0.5}, Point{0.5, 0.5}));
    CHECK_FALSE(l->segment_inside(Point{-0.25, -0.75}, Point{0.75, 0.25}));
    // touching the reentrant corner alone already disqualifies
    CHECK_FALSE(l->segment_inside(Point{-0.5, -0.5}, Point{0.5, 0.5}));
    // thin clip near the corner, invisible to coarse sampling
    CHECK_FALSE(l->segment_inside(Point{-0.001, -0.5}, Point{0.5, 0.001}));

    auto a = make_annulus(0.5, 1.0);
    CHECK(a->segment_inside(Point{0.9, 0.0}, Point{0.0, 0.9}));
    CHECK_FALSE(a->segment_inside(Point{0.6, 0.0}, Point{0.0, 0.6}));   // dips to 0.42 < 0.5
    CHECK_FALSE(a->segment_inside(Point{0.6, 0.0}, Point{-0.6, 0.0}));  // through the hole

    auto d = make_unit_disk();
    CHECK(d->segment_inside(Point{-0.9, 0.0}, Point{0.9, 0.0}));
    CHECK_FALSE(d->segment_inside(Point{-0.9, 0.0}, Point{1.5, 0.0}));
}

TEST_CASE("weights evaluate their formula and guard their domain") {
    auto disk = make_unit_disk();

    auto c = Weight::constant(disk, 3.0);
    CHECK(c.eval(Point{0.1, 0.1}) == Approx(3.0));
    CHECK_THROWS_AS(c.eval(Point{2.0, 0.0}), domain_violation_error);

    auto d = Weight::dist(disk);
    CHECK(d.eval(Point{0.5, 0.0}) == Approx(0.5));

    auto p = Weight::dist_pow(disk, 0.5);  // bd^(alpha-1) = bd^(-1/2)
    CHECK(p.eval(Point{0.0, 0.0}) == Approx(1.0));
    CHECK(p.eval(Point{0.75, 0.0}) == Approx(2.0));
    CHECK_THROWS_AS(Weight::dist_pow(disk, 1.0), invalid_input_error);
    CHECK_THROWS_AS(Weight::dist_pow(disk, 0.0), invalid_input_error);

    auto q = Weight::reciprocal_dist(disk);
    CHECK(q.eval(Point{0.5, 0.0}) == Approx(2.0));
    CHECK_THROWS_AS(q.eval(Point{1.5, 0.0}), domain_violation_error);

    auto u = Weight::user(disk, [](const Point& x) { return 1.0 + x[0] * x[0]; }, "1+x^2");
    CHECK(u.eval(Point{0.5, 0.0}) == Approx(1.25));
    CHECK_THROWS_AS(u.eval(Point{1.5, 0.0}), domain_violation_error);
}

TEST_CASE("constant weight must be positive") {
    auto disk = make_unit_disk();
    CHECK_THROWS_AS(Weight::constant(disk, 0.0), invalid_input_error);
    CHECK_THROWS_AS(Weight::constant(disk, -1.0), invalid_input_error);
}

TEST_CASE("dimension mismatch is reported as bad input, not as outside") {
    auto disk = make_unit_disk();
    CHECK_THROWS_AS(disk->boundary_distance(Point{0.1, 0.1, 0.1}), invalid_input_error);
}
