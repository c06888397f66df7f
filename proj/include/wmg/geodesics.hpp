#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wmg/curves.hpp"
#include "wmg/domains.hpp"
#include "wmg/majorant.hpp"

namespace wmg {

/// Upper approximation of the weighted distance d_w with its witness curve.
/// value is an upper bound by construction (it is the integral over one
/// admissible curve); no lower bound is attempted.
struct GeodesicResult {
    double value;       // curve_integral(w, curve) within 1e-8 relative
    Curve curve;        // endpoints are exactly the requested (x, y)
    double resolution;  // grid spacing h used
    bool refined;       // shortcut/smoothing changed the raw grid path
};

/// Grid shortest-path solver. Nodes are the points of the origin-anchored
/// lattice h*Z^n lying in the domain with boundary_distance > h/2; edges are
/// king moves with cost = adaptive integral of w over the straight edge.
/// After the search the path is post-processed: a greedy chord-shortcut pass
/// removes the O(h) metrication overhead wherever a straight replacement is
/// admissible and no worse, then 3 sweeps of cell-constrained vertex
/// smoothing polish what remains.
///
/// One instance owns lazily filled caches of node validity and edge costs
/// keyed by lattice coordinates, so repeated solves against the same weight
/// (check_extension_condition, topology sweeps) share nearly all work.
class GeodesicSolver {
public:
    /// dim <= 4; h > 0.
    GeodesicSolver(Weight w, double h);

    /// Requires both points interior with boundary_distance > h
    /// (precondition_error) and a connected grid route (resolution_error).
    GeodesicResult solve(const Point& x, const Point& y);

    const Weight& weight() const { return w_; }
    double resolution() const { return h_; }

private:
    using Key = std::uint64_t;

    struct Node {
        Point pos;
        bool valid;
    };

    Key pack(const std::vector<int>& iv) const;
    const Node& node(const std::vector<int>& iv);
    double edge_cost(const std::vector<int>& from, Key from_key, int offset_index);
    std::pair<std::vector<int>, double> attach(const Point& p,
                                               const std::vector<int>& ilo,
                                               const std::vector<int>& ihi);
    void grid_bounds(const Point& x, const Point& y,
                     std::vector<int>& ilo, std::vector<int>& ihi) const;
    std::vector<Point> shortcut(const std::vector<Point>& v) const;
    void smooth(std::vector<Point>& v) const;

    Weight w_;
    double h_;
    int dim_;
    std::vector<std::vector<int>> offsets_;  // all nonzero vectors in {-1,0,1}^n
    std::vector<int> canon_;                 // offset index -> canonical positive index
    std::vector<int> canon_flip_;            // 1 if canonical direction starts at the neighbor
    std::unordered_map<Key, Node> nodes_;
    std::unordered_map<Key, double> edges_;  // (node key * #positive offsets + id)
};

/// One-shot convenience wrapper around GeodesicSolver.
GeodesicResult weighted_distance_upper(const Weight& w, const Point& x, const Point& y, double h);

/// Sampled check of the extension condition: over the given pairs, the max of
/// value / phi(|x-y|). Because value is an upper bound on d_w, M_observed is
/// a certified upper bound for the best constant on exactly these pairs; it
/// says nothing beyond them.
struct ConditionReport {
    double M_observed = 0.0;
    std::pair<Point, Point> worst_pair;
    std::size_t pairs_tested = 0;
    std::vector<double> ratios;          // one per tested pair, input order
    std::size_t skipped_coincident = 0;
    /// Worst ratio among the quarter of pairs nearest the boundary exceeds
    /// twice the worst ratio among the farthest quarter. A heuristic marker
    /// that the constant is blowing up toward the boundary, not a proof.
    bool divergence_suspected = false;
};

ConditionReport check_extension_condition(const Weight& w, const Majorant& phi,
                                          const std::vector<std::pair<Point, Point>>& pairs,
                                          double h);

/// d_w(x,y)/|x-y| bracket over the sphere |y-x| = r, one entry per radius.
struct RatioBracket {
    double r;
    double min_ratio;
    double max_ratio;
};

/// Shrinking brackets witness that d_w and the Euclidean metric induce the
/// same topology near x: both ends approach w(x)/1 scaled ratios as r drops.
/// radii must be strictly decreasing and every sphere must stay well inside
/// the domain. The internal grid uses h = min(0.01, r_min/20).
std::vector<RatioBracket> topology_equivalence_ratio(const Weight& w, const Point& x,
                                                     const std::vector<double>& radii,
                                                     int samples_per_radius);

} // namespace wmg
