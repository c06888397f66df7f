#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wmg/domains.hpp"
#include "wmg/geometry.hpp"

namespace wmg {

/// Halton low-discrepancy sequence in [0,1)^dim. The seed leaps the start
/// index, so different seeds give different (still well-spread) streams and
/// the same seed always reproduces the same stream.
class HaltonSequence {
public:
    HaltonSequence(int dim, std::uint64_t seed);

    std::vector<double> next();

private:
    int dim_;
    std::uint64_t index_;
};

/// splitmix64 step; used to derive independent sub-stream seeds from one
/// config seed without correlation between streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Quasi-random interior points with boundary_distance >= min_bd. The search
/// box defaults to the domain's bounding box; unbounded domains require an
/// explicit box.
std::vector<Point> sample_domain_points(const Domain& domain, std::size_t count,
                                        std::uint64_t seed, double min_bd,
                                        std::optional<Box> box = std::nullopt);

/// Disjoint quasi-random pairs, same acceptance rule per endpoint.
std::vector<std::pair<Point, Point>> sample_domain_pairs(const Domain& domain, std::size_t count,
                                                         std::uint64_t seed, double min_bd,
                                                         std::optional<Box> box = std::nullopt);

/// Deterministic unit directions: the sign pair in dimension 1, equal angles
/// (including angle 0) in dimension 2, a Fibonacci sphere in dimension 3 and
/// a seeded Gaussian set above that.
std::vector<Point> sphere_directions(int dim, int count);

/// Moves p along the inward distance gradient until boundary_distance ~= target.
/// The gradient is taken by central differences; for the built-in domains the
/// distance function is piecewise linear along the normal, so a few Newton
/// steps land essentially exactly.
Point push_to_boundary_distance(const Domain& domain, Point p, double target_bd);

/// Unit directions orthogonal to the local boundary-distance gradient
/// (dim - 1 of them, pairwise orthogonal).
std::vector<Point> boundary_tangents(const Domain& domain, const Point& p);

} // namespace wmg
