#include "wmg/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "wmg/sampling.hpp"

namespace wmg {

namespace {

constexpr double kEdgeTol = 1e-6;    // guides the search only
constexpr double kRefineTol = 1e-8;  // shortcut probes and smoothing
constexpr double kFinalTol = 1e-10;  // reported value
constexpr int kCoordBits = 14;
constexpr int kCoordBias = 8192;     // lattice indices must fit [-8192, 8191]
constexpr double kInf = std::numeric_limits<double>::infinity();

void drop_consecutive_duplicates(std::vector<Point>& v) {
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

GeodesicSolver::GeodesicSolver(Weight w, double h) : w_(std::move(w)), h_(h) {
    dim_ = w_.domain().dimension();
    if (dim_ < 1 || dim_ > 4)
        throw invalid_input_error("GeodesicSolver: dimension must lie in [1, 4]");
    if (!(h > 0.0) || !std::isfinite(h))
        throw invalid_input_error("GeodesicSolver: h must be positive and finite");

    // King moves, enumerated in odometer order over {-1,0,1}^n. The vector
    // with odometer value v and its negation pair up as v + v' = 3^n - 1, so
    // the canonical (positive) twin of every offset is index arithmetic.
    int total = 1;
    for (int c = 0; c < dim_; ++c) total *= 3;
    const int mid = (total - 1) / 2;  // odometer value of the zero vector
    for (int v = 0; v < total; ++v) {
        if (v == mid) continue;
        std::vector<int> o(dim_);
        int rem = v;
        for (int c = 0; c < dim_; ++c) {
            o[c] = rem % 3 - 1;
            rem /= 3;
        }
        offsets_.push_back(std::move(o));
        canon_.push_back(v > mid ? v - mid - 1 : mid - v - 1);
        canon_flip_.push_back(v < mid ? 1 : 0);
    }
}

GeodesicSolver::Key GeodesicSolver::pack(const std::vector<int>& iv) const {
    Key key = 0;
    for (int c = 0; c < dim_; ++c) {
        if (iv[c] < -kCoordBias || iv[c] >= kCoordBias)
            throw resolution_error("GeodesicSolver: lattice index out of range; "
                                   "h is too small for the requested extent");
        key |= static_cast<Key>(iv[c] + kCoordBias) << (kCoordBits * c);
    }
    return key;
}

const GeodesicSolver::Node& GeodesicSolver::node(const std::vector<int>& iv) {
    Key key = pack(iv);
    auto it = nodes_.find(key);
    if (it != nodes_.end()) return it->second;

    Point pos = Point::zero(dim_);
    for (int c = 0; c < dim_; ++c) pos[c] = iv[c] * h_;
    bool valid = w_.domain().contains(pos) &&
                 w_.domain().boundary_distance(pos) > h_ / 2.0;
    return nodes_.emplace(key, Node{std::move(pos), valid}).first->second;
}

double GeodesicSolver::edge_cost(const std::vector<int>& from, Key from_key, int offset_index) {
    const auto& off = offsets_[offset_index];
    const int id = canon_[offset_index];
    const int P = static_cast<int>(offsets_.size()) / 2;

    std::vector<int> other(dim_);
    for (int c = 0; c < dim_; ++c) other[c] = from[c] + off[c];

    // The cache entry lives on the canonical end of the edge, so both
    // traversal directions (and later solves) hit the same value.
    Key base_key;
    const std::vector<int>* base;
    std::vector<int> flipped;
    if (canon_flip_[offset_index]) {
        base_key = pack(other);
        base = &other;
        flipped = from;
    } else {
        base_key = from_key;
        base = &from;
        flipped = other;
    }
    Key ekey = base_key * static_cast<Key>(P) + static_cast<Key>(id);
    auto it = edges_.find(ekey);
    if (it != edges_.end()) return it->second;

    Point a = Point::zero(dim_), b = Point::zero(dim_);
    for (int c = 0; c < dim_; ++c) {
        a[c] = (*base)[c] * h_;
        b[c] = flipped[c] * h_;
    }
    double cost = kInf;
    if (w_.domain().segment_inside(a, b)) {
        try {
            cost = segment_integral(w_, a, b, kEdgeTol);
        } catch (const domain_violation_error&) {
            cost = kInf;  // grazing segment; unusable
        }
    }
    edges_.emplace(ekey, cost);
    return cost;
}

void GeodesicSolver::grid_bounds(const Point& x, const Point& y,
                                 std::vector<int>& ilo, std::vector<int>& ihi) const {
    Point lo = Point::zero(dim_), hi = Point::zero(dim_);
    auto bb = w_.domain().bounding_box();
    if (bb) {
        Box b = bb->inflated(h_);
        lo = b.lo;
        hi = b.hi;
    } else {
        // Unbounded domain: a pair-local window. The margin covers the usual
        // geodesic bulge (e.g. quasi-hyperbolic arcs peak within ||x-y|| of
        // the endpoints); paths beyond it would only raise the upper bound.
        double m = std::max({distance(x, y),
                             w_.domain().boundary_distance(x),
                             w_.domain().boundary_distance(y)}) + 2.0 * h_;
        for (int c = 0; c < dim_; ++c) {
            lo[c] = std::min(x[c], y[c]) - m;
            hi[c] = std::max(x[c], y[c]) + m;
        }
    }
    ilo.resize(dim_);
    ihi.resize(dim_);
    for (int c = 0; c < dim_; ++c) {
        double l = std::ceil(lo[c] / h_ - 1e-9);
        double u = std::floor(hi[c] / h_ + 1e-9);
        if (l < -kCoordBias || u >= kCoordBias)
            throw resolution_error("GeodesicSolver: grid extent exceeds the index range; "
                                   "use a larger h or a smaller window");
        ilo[c] = static_cast<int>(l);
        ihi[c] = static_cast<int>(u);
    }
}

std::pair<std::vector<int>, double> GeodesicSolver::attach(const Point& p,
                                                           const std::vector<int>& ilo,
                                                           const std::vector<int>& ihi) {
    std::vector<int> base(dim_);
    for (int c = 0; c < dim_; ++c) base[c] = static_cast<int>(std::llround(p[c] / h_));

    // Candidate nodes of the surrounding 5^n block, nearest first.
    struct Cand {
        double dist2;
        std::vector<int> iv;
    };
    std::vector<Cand> cands;
    int total = 1;
    for (int c = 0; c < dim_; ++c) total *= 5;
    for (int v = 0; v < total; ++v) {
        std::vector<int> iv(dim_);
        int rem = v;
        bool in_bounds = true;
        double d2 = 0.0;
        for (int c = 0; c < dim_; ++c) {
            iv[c] = base[c] + rem % 5 - 2;
            rem /= 5;
            if (iv[c] < ilo[c] || iv[c] > ihi[c]) in_bounds = false;
            double d = iv[c] * h_ - p[c];
            d2 += d * d;
        }
        if (in_bounds) cands.push_back({d2, std::move(iv)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
        return a.iv < b.iv;
    });

    for (const auto& cand : cands) {
        const Node& n = node(cand.iv);
        if (!n.valid) continue;
        if (!w_.domain().segment_inside(p, n.pos)) continue;
        try {
            double hop = segment_integral(w_, p, n.pos, kEdgeTol);
            return {cand.iv, hop};
        } catch (const domain_violation_error&) {
            continue;  // hop segment grazes the boundary; try the next node
        }
    }
    throw resolution_error("GeodesicSolver: no usable grid node near " + p.str() +
                           " at resolution " + format_double(h_));
}

std::vector<Point> GeodesicSolver::shortcut(const std::vector<Point>& v) const {
    if (v.size() < 3) return v;

    std::vector<double> prefix(v.size(), 0.0);
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        prefix[i + 1] = prefix[i] + segment_integral(w_, v[i], v[i + 1], kRefineTol);

    auto good = [&](std::size_t i, std::size_t j) {
        if (j == i + 1) return true;
        if (!w_.domain().segment_inside(v[i], v[j])) return false;
        double chain = prefix[j] - prefix[i];
        try {
            double direct = segment_integral(w_, v[i], v[j], kRefineTol);
            return direct <= chain + 1e-12 * std::max(1.0, chain);
        } catch (const domain_violation_error&) {
            return false;
        }
    };

    // Greedy farthest-reach: binary-maximize the span from each anchor. If
    // admissibility is not monotone in the span the result is merely a valid
    // (slightly longer) polyline; smoothing still applies afterwards.
    std::vector<Point> out;
    out.push_back(v.front());
    std::size_t i = 0;
    while (i + 1 < v.size()) {
        std::size_t lo = i + 1, hi = v.size() - 1;
        if (good(i, hi)) {
            lo = hi;
        } else {
            while (lo < hi) {
                std::size_t m = lo + (hi - lo + 1) / 2;
                if (good(i, m))
                    lo = m;
                else
                    hi = m - 1;
            }
        }
        out.push_back(v[lo]);
        i = lo;
    }
    return out;
}

void GeodesicSolver::smooth(std::vector<Point>& v) const {
    if (v.size() < 3) return;
    const std::vector<Point> anchor(v.begin(), v.end());
    const double cell = h_ / 2.0 + 1e-12 * h_;

    // Three sweeps with a halving step: coarse corrections first, then polish.
    const double steps[3] = {h_ / 4.0, h_ / 8.0, h_ / 16.0};
    for (double step : steps) {
        for (std::size_t k = 1; k + 1 < v.size(); ++k) {
            double cur = segment_integral(w_, v[k - 1], v[k], kRefineTol) +
                         segment_integral(w_, v[k], v[k + 1], kRefineTol);
            for (int c = 0; c < dim_; ++c) {
                for (double s : {1.0, -1.0}) {
                    Point cand = v[k];
                    cand[c] += s * step;
                    if (std::fabs(cand[c] - anchor[k][c]) > cell) continue;
                    if (!w_.domain().segment_inside(v[k - 1], cand) ||
                        !w_.domain().segment_inside(cand, v[k + 1]))
                        continue;
                    double alt;
                    try {
                        alt = segment_integral(w_, v[k - 1], cand, kRefineTol) +
                              segment_integral(w_, cand, v[k + 1], kRefineTol);
                    } catch (const domain_violation_error&) {
                        continue;
                    }
                    if (alt < cur - 1e-9 * std::max(1.0, cur)) {
                        v[k] = cand;
                        cur = alt;
                    }
                }
            }
        }
    }
}

GeodesicResult GeodesicSolver::solve(const Point& x, const Point& y) {
    if (x.dim() != dim_ || y.dim() != dim_)
        throw invalid_input_error("GeodesicSolver: point dimension mismatch");
    double bdx = w_.domain().boundary_distance(x);  // throws if outside
    double bdy = w_.domain().boundary_distance(y);
    if (!(bdx > h_ && bdy > h_))
        throw precondition_error("GeodesicSolver: endpoints must keep boundary distance > h");

    std::vector<int> ilo, ihi;
    grid_bounds(x, y, ilo, ihi);

    auto [ix, hopx] = attach(x, ilo, ihi);
    auto [iy, hopy] = attach(y, ilo, ihi);
    (void)hopx;
    (void)hopy;
    Key kx = pack(ix), ky = pack(iy);

    std::vector<Point> raw;
    raw.push_back(x);

    if (kx == ky) {
        raw.push_back(node(ix).pos);
    } else {
        const int P2 = static_cast<int>(offsets_.size());
        std::unordered_map<Key, double> dist;
        std::unordered_map<Key, Key> prev;
        using QEntry = std::pair<double, Key>;
        std::priority_queue<QEntry, std::vector<QEntry>, std::greater<>> pq;
        dist.reserve(1024);
        dist[kx] = 0.0;
        pq.push({0.0, kx});

        bool reached = false;
        std::vector<int> iu(dim_), iv(dim_);
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            auto dit = dist.find(u);
            if (dit == dist.end() || du > dit->second) continue;
            if (u == ky) {
                reached = true;
                break;
            }
            for (int c = 0; c < dim_; ++c)
                iu[c] = static_cast<int>((u >> (kCoordBits * c)) & ((1 << kCoordBits) - 1)) -
                        kCoordBias;
            for (int oi = 0; oi < P2; ++oi) {
                bool in_bounds = true;
                for (int c = 0; c < dim_; ++c) {
                    iv[c] = iu[c] + offsets_[oi][c];
                    if (iv[c] < ilo[c] || iv[c] > ihi[c]) in_bounds = false;
                }
                if (!in_bounds) continue;
                const Node& nv = node(iv);
                if (!nv.valid) continue;
                double w = edge_cost(iu, u, oi);
                if (!std::isfinite(w)) continue;
                double nd = du + w;
                Key vkey = pack(iv);
                auto vit = dist.find(vkey);
                if (vit == dist.end() || nd < vit->second) {
                    dist[vkey] = nd;
                    prev[vkey] = u;
                    pq.push({nd, vkey});
                }
            }
        }
        if (!reached)
            throw resolution_error("GeodesicSolver: endpoints are not connected on the grid "
                                   "at resolution " + format_double(h_));

        std::vector<Point> chain;
        for (Key k = ky;; k = prev.at(k)) {
            std::vector<int> ik(dim_);
            for (int c = 0; c < dim_; ++c)
                ik[c] = static_cast<int>((k >> (kCoordBits * c)) & ((1 << kCoordBits) - 1)) -
                        kCoordBias;
            chain.push_back(node(ik).pos);
            if (k == kx) break;
        }
        raw.insert(raw.end(), chain.rbegin(), chain.rend());
    }
    raw.push_back(y);
    drop_consecutive_duplicates(raw);

    // Post-process in a canonical orientation so solve(x,y) and solve(y,x)
    // polish the same polyline and report the same value.
    bool flipped = std::lexicographical_compare(y.coords().begin(), y.coords().end(),
                                                x.coords().begin(), x.coords().end());
    if (flipped) std::reverse(raw.begin(), raw.end());

    std::vector<Point> polished = shortcut(raw);
    smooth(polished);
    drop_consecutive_duplicates(polished);
    bool refined = polished != raw;

    if (flipped) std::reverse(polished.begin(), polished.end());

    Curve curve(polished);
    double value = curve_integral(w_, curve, kFinalTol);
    return GeodesicResult{value, std::move(curve), h_, refined};
}

GeodesicResult weighted_distance_upper(const Weight& w, const Point& x, const Point& y, double h) {
    GeodesicSolver solver(w, h);
    return solver.solve(x, y);
}

ConditionReport check_extension_condition(const Weight& w, const Majorant& phi,
                                          const std::vector<std::pair<Point, Point>>& pairs,
                                          double h) {
    if (pairs.empty())
        throw invalid_input_error("check_extension_condition: no pairs given");

    GeodesicSolver solver(w, h);
    ConditionReport report;
    std::vector<double> near_bd;  // min endpoint boundary distance per tested pair

    for (const auto& [x, y] : pairs) {
        double d = distance(x, y);
        if (d == 0.0) {
            ++report.skipped_coincident;
            continue;
        }
        double denom = phi.eval(d);
        if (!(denom > 0.0))
            throw precondition_error("check_extension_condition: phi(d) must be positive "
                                     "for distinct pairs");
        GeodesicResult res = solver.solve(x, y);
        double ratio = res.value / denom;
        report.ratios.push_back(ratio);
        near_bd.push_back(std::min(w.domain().boundary_distance(x),
                                   w.domain().boundary_distance(y)));
        if (ratio > report.M_observed) {
            report.M_observed = ratio;
            report.worst_pair = {x, y};
        }
    }
    report.pairs_tested = report.ratios.size();

    if (report.pairs_tested >= 4) {
        std::vector<std::size_t> order(report.pairs_tested);
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (near_bd[a] != near_bd[b]) return near_bd[a] < near_bd[b];
            return a < b;
        });
        std::size_t q = report.pairs_tested / 4;
        double max_near = 0.0, max_far = 0.0;
        for (std::size_t i = 0; i < q; ++i) {
            max_near = std::max(max_near, report.ratios[order[i]]);
            max_far = std::max(max_far, report.ratios[order[order.size() - 1 - i]]);
        }
        report.divergence_suspected = max_near > 2.0 * max_far;
    }
    return report;
}

std::vector<RatioBracket> topology_equivalence_ratio(const Weight& w, const Point& x,
                                                     const std::vector<double>& radii,
                                                     int samples_per_radius) {
    if (radii.empty())
        throw invalid_input_error("topology_equivalence_ratio: radii list is empty");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0))
            throw invalid_input_error("topology_equivalence_ratio: radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw invalid_input_error("topology_equivalence_ratio: radii must be strictly "
                                      "decreasing");
    }
    if (samples_per_radius < 1)
        throw invalid_input_error("topology_equivalence_ratio: need at least one sample");

    const double h = std::min(0.01, radii.back() / 20.0);
    double bd_x = w.domain().boundary_distance(x);
    if (!(bd_x > radii.front() + 2.0 * h))
        throw precondition_error("topology_equivalence_ratio: sphere of radius " +
                                 format_double(radii.front()) + " exits the domain collar");

    GeodesicSolver solver(w, h);
    auto dirs = sphere_directions(x.dim(), samples_per_radius);

    std::vector<RatioBracket> brackets;
    for (double r : radii) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& dir : dirs) {
            Point y = x + r * dir;
            double ratio = solver.solve(x, y).value / distance(x, y);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        brackets.push_back(RatioBracket{r, lo, hi});
    }
    return brackets;
}

} // namespace wmg
