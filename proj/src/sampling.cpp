#include "wmg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wmg {

namespace {

constexpr int kHaltonBases[] = {2, 3, 5, 7, 11, 13, 17, 19};

double radical_inverse(std::uint64_t i, int base) {
    const double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
        i /= static_cast<std::uint64_t>(base);
        f *= inv;
    }
    return r;
}

Box sampling_box(const Domain& domain, const std::optional<Box>& box) {
    if (box) return *box;
    auto bb = domain.bounding_box();
    if (!bb)
        throw invalid_input_error("sampling: domain '" + domain.kind() +
                                  "' is unbounded; an explicit box is required");
    return *bb;
}

// Unit inward gradient of boundary_distance at p, by central differences.
// bd is 1-Lipschitz, so probes closer than bd to p stay inside the domain.
Point distance_gradient(const Domain& domain, const Point& p) {
    const int dim = domain.dimension();
    const double bd = domain.boundary_distance(p);
    const double step = std::max(1e-9, 1e-3 * bd);
    Point g = Point::zero(dim);
    for (int i = 0; i < dim; ++i) {
        Point a = p, b = p;
        a[i] += step;
        b[i] -= step;
        g[i] = (domain.boundary_distance(a) - domain.boundary_distance(b)) / (2.0 * step);
    }
    return g;
}

// [0,1) from the top 53 bits; avoids unspecified distribution internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

HaltonSequence::HaltonSequence(int dim, std::uint64_t seed) : dim_(dim) {
    if (dim < 1 || dim > 8)
        throw invalid_input_error("HaltonSequence: dimension must lie in [1, 8]");
    index_ = 1 + seed * 7919ULL;
}

std::vector<double> HaltonSequence::next() {
    std::vector<double> u(static_cast<std::size_t>(dim_));
    for (int d = 0; d < dim_; ++d)
        u[static_cast<std::size_t>(d)] = radical_inverse(index_, kHaltonBases[d]);
    ++index_;
    return u;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Point> sample_domain_points(const Domain& domain, std::size_t count,
                                        std::uint64_t seed, double min_bd,
                                        std::optional<Box> box) {
    const Box b = sampling_box(domain, box);
    const int dim = domain.dimension();
    HaltonSequence halton(dim, seed);

    std::vector<Point> points;
    points.reserve(count);
    const std::size_t max_draws = 10000 * count + 10000;
    for (std::size_t draw = 0; draw < max_draws && points.size() < count; ++draw) {
        auto u = halton.next();
        Point p = Point::zero(dim);
        for (int i = 0; i < dim; ++i)
            p[i] = b.lo[i] + u[static_cast<std::size_t>(i)] * (b.hi[i] - b.lo[i]);
        if (!domain.contains(p)) continue;
        if (domain.boundary_distance(p) < min_bd) continue;
        points.push_back(std::move(p));
    }
    if (points.size() < count)
        throw invalid_input_error("sample_domain_points: rejection sampling starved; "
                                  "box/min_bd leave too little of the domain");
    return points;
}

std::vector<std::pair<Point, Point>> sample_domain_pairs(const Domain& domain, std::size_t count,
                                                         std::uint64_t seed, double min_bd,
                                                         std::optional<Box> box) {
    auto points = sample_domain_points(domain, 2 * count, seed, min_bd, std::move(box));
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i + 1 < points.size(); i += 2)
        pairs.emplace_back(points[i], points[i + 1]);
    return pairs;
}

std::vector<Point> sphere_directions(int dim, int count) {
    if (dim < 1) throw invalid_input_error("sphere_directions: dimension must be >= 1");
    if (count < 1) throw invalid_input_error("sphere_directions: count must be >= 1");
    std::vector<Point> dirs;
    dirs.reserve(static_cast<std::size_t>(count));

    if (dim == 1) {
        dirs.push_back(Point{1.0});
        if (count > 1) dirs.push_back(Point{-1.0});
        return dirs;
    }
    if (dim == 2) {
        for (int k = 0; k < count; ++k) {
            double a = 2.0 * M_PI * k / count;
            dirs.push_back(Point{std::cos(a), std::sin(a)});
        }
        return dirs;
    }
    if (dim == 3) {
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < count; ++k) {
            double z = 1.0 - 2.0 * (k + 0.5) / count;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double a = golden * k;
            dirs.push_back(Point{r * std::cos(a), r * std::sin(a), z});
        }
        return dirs;
    }

    // Above 3-d there is no nice lattice; use Box-Muller normals from a fixed
    // stream (raw engine bits, so the values do not depend on library internals).
    std::mt19937_64 rng(0x51d7a9c3b24e681fULL);
    while (static_cast<int>(dirs.size()) < count) {
        std::vector<double> v(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; i += 2) {
            double u1 = std::max(uniform01(rng), 1e-300);
            double u2 = uniform01(rng);
            double r = std::sqrt(-2.0 * std::log(u1));
            v[static_cast<std::size_t>(i)] = r * std::cos(2.0 * M_PI * u2);
            if (i + 1 < dim) v[static_cast<std::size_t>(i) + 1] = r * std::sin(2.0 * M_PI * u2);
        }
        Point p{std::move(v)};
        double n = p.norm();
        if (n < 1e-8) continue;
        dirs.push_back((1.0 / n) * p);
    }
    return dirs;
}

Point push_to_boundary_distance(const Domain& domain, Point p, double target_bd) {
    if (!(target_bd > 0.0))
        throw invalid_input_error("push_to_boundary_distance: target must be positive");
    for (int iter = 0; iter < 16; ++iter) {
        double bd = domain.boundary_distance(p);
        if (std::fabs(bd - target_bd) <= 1e-12 * std::max(1.0, target_bd)) break;

        Point g = distance_gradient(domain, p);
        double gn = g.norm();
        if (gn < 1e-9) break;  // on a distance ridge; the current point has to do

        // Newton step for bd(p + t g/|g|) = target, with halving to stay inside.
        double move = (target_bd - bd) / gn;
        Point candidate = p;
        bool ok = false;
        for (int halving = 0; halving < 40; ++halving) {
            for (int i = 0; i < p.dim(); ++i) candidate[i] = p[i] + move * g[i] / gn;
            if (domain.contains(candidate)) {
                ok = true;
                break;
            }
            move *= 0.5;
        }
        if (!ok) break;
        p = candidate;
    }
    return p;
}

std::vector<Point> boundary_tangents(const Domain& domain, const Point& p) {
    const int dim = domain.dimension();
    Point g = distance_gradient(domain, p);
    double gn = g.norm();

    std::vector<Point> basis;
    if (gn > 1e-9) {
        basis.push_back((1.0 / gn) * g);
    } else {
        Point e = Point::zero(dim);
        e[0] = 1.0;
        basis.push_back(e);
    }

    // Gram-Schmidt the coordinate axes against the (unit) gradient.
    std::vector<Point> tangents;
    for (int axis = 0; axis < dim && static_cast<int>(tangents.size()) < dim - 1; ++axis) {
        Point v = Point::zero(dim);
        v[axis] = 1.0;
        for (const Point& b : basis) {
            double dot = 0.0;
            for (int i = 0; i < dim; ++i) dot += v[i] * b[i];
            for (int i = 0; i < dim; ++i) v[i] -= dot * b[i];
        }
        double vn = v.norm();
        if (vn > 1e-8) {
            v = (1.0 / vn) * v;
            basis.push_back(v);
            tangents.push_back(v);
        }
    }
    return tangents;
}

} // namespace wmg
