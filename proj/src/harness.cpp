#include "wmg/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wmg/errors.hpp"
#include "wmg/sampling.hpp"

namespace wmg {

namespace {

TheoremReport make_report(std::string id, double left, double right, double constant,
                          std::string label, std::string instance, std::string metadata,
                          bool oracle_backed) {
    TheoremReport r;
    r.theorem_id = std::move(id);
    r.left = left;
    r.right = right;
    r.constant_used = constant;
    r.constant_label = std::move(label);
    r.instance = std::move(instance);
    r.metadata = std::move(metadata);
    r.oracle_backed = oracle_backed;
    if (left > 0.0) r.slack = right / left;
    r.status = (left <= right * (1.0 + r.tol)) ? TheoremReport::Status::pass
                                               : TheoremReport::Status::fail;
    return r;
}

std::string describe(const Mapping& f, const Weight& w, const Majorant& phi) {
    return f.name() + ", w=" + w.name() + ", phi=" + phi.name() + ", domain=" +
           w.domain().kind();
}

// Farthest contained point from the box center along direction e; the start
// of the boundary push for probe/profile anchors.
Point fan_anchor(const Domain& dom, const Point& center, const Point& e, double reach) {
    for (int k = 63; k >= 1; --k) {
        const Point q = center + (reach * k / 64.0) * e;
        if (dom.contains(q)) return q;
    }
    return center;
}

std::vector<double> weight_grid(const Weight& w, const std::vector<Point>& points) {
    std::vector<double> grid;
    grid.reserve(points.size());
    for (const auto& x : points) grid.push_back(w.eval(x));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace

const char* to_string(TheoremReport::Status s) {
    switch (s) {
        case TheoremReport::Status::pass: return "pass";
        case TheoremReport::Status::fail: return "fail";
        case TheoremReport::Status::hypothesis_unmet: return "hypothesis_unmet";
    }
    return "unknown";
}

TheoremReport verify_forward(const Mapping& f, const Weight& w, const Majorant& phi,
                             const std::vector<std::pair<Point, Point>>& pairs,
                             const std::vector<Point>& points, double h) {
    const ConditionReport cond = check_extension_condition(w, phi, pairs, h);
    const NormEstimate holder = holder_norm_estimate(f, phi, pairs);
    const NormEstimate bloch = bloch_norm_estimate(f, w, points);

    std::ostringstream meta;
    meta << "pairs=" << pairs.size() << ", points=" << points.size() << ", h="
         << format_double(h) << ", M_observed=" << format_double(cond.M_observed)
         << ", bloch=" << format_double(bloch.value);
    if (cond.skipped_coincident > 0) meta << ", skipped=" << cond.skipped_coincident;

    TheoremReport r = make_report("forward", holder.value, cond.M_observed * bloch.value,
                                  cond.M_observed, "M", describe(f, w, phi), meta.str(),
                                  f.has_derivative_oracle());
    if (cond.divergence_suspected) {
        r.status = TheoremReport::Status::hypothesis_unmet;
        r.metadata += ", extension-condition constant appears to blow up near the boundary";
    }
    return r;
}

double holder_boundary_probe(const Mapping& f, const Majorant& phi, double collar) {
    if (!(collar > 0.0) || !(collar < 0.5))
        throw invalid_input_error("probe collar must lie in (0, 0.5)");
    const Domain& dom = f.source();
    const auto box = dom.bounding_box();
    if (!box)
        throw invalid_input_error("boundary probe needs a bounded source domain");
    Point center = box->lo;
    double reach = 0.0;
    for (int i = 0; i < center.dim(); ++i) {
        center[i] = 0.5 * (box->lo[i] + box->hi[i]);
        reach += (box->hi[i] - box->lo[i]) * (box->hi[i] - box->lo[i]);
    }
    reach = 0.5 * std::sqrt(reach);

    const auto fan = sphere_directions(dom.dimension(), dstar_default_directions(dom.dimension()));
    double best = 0.0;
    std::size_t hits = 0;
    for (const auto& e : fan) {
        Point start = fan_anchor(dom, center, e, reach);
        if (!dom.contains(start)) continue;
        try {
            const Point near = push_to_boundary_distance(dom, start, collar);
            const Point far = push_to_boundary_distance(dom, start, 2.0 * collar);
            const double d = distance(near, far);
            if (d == 0.0) continue;
            best = std::max(best, distance(f.evaluate(near), f.evaluate(far)) / phi.eval(d));
            ++hits;
        } catch (const wmg_error&) {
            continue;  // direction without a usable anchor (thin corner etc.)
        }
    }
    if (hits == 0)
        throw precondition_error("boundary probe found no usable direction");
    return best;
}

TheoremReport verify_converse_strong(const Mapping& f, const Weight& w, const Majorant& phi,
                                     double A, const std::vector<Point>& points,
                                     const std::vector<double>& radius_fractions) {
    if (points.empty()) throw invalid_input_error("verify_converse_strong needs sample points");
    const auto grid = weight_grid(w, points);
    const ConditionAReport condA = check_condition_A(phi, A, grid);
    if (!condA.holds)
        throw precondition_error("condition (A) fails on the sampled weight values: worst ratio " +
                                 format_double(condA.worst_ratio) + " at t=" +
                                 format_double(condA.worst_t) + " with A=" + format_double(A));

    double left = 0.0;
    for (const auto& x : points) {
        const double denom = phi.deriv(w.eval(x));
        if (!(denom > 0.0))
            throw degenerate_majorant_error("phi' vanishes at w(" + x.str() + ")");
        left = std::max(left, dstar_estimate(f, x).value / denom);
    }

    // The Schwarz-lemma K = 1 only covers the boundary-distance weight; every
    // other weight has to earn its K from the RO estimate, and when the RO
    // balls r = q*w(x) cannot fit inside the domain the hypothesis itself is
    // out of reach.
    double k = 1.0;
    std::string k_route = "K=1 (bounded analytic)";
    bool ro_flagged = false;
    bool ro_unsampleable = false;
    std::string ro_failure;
    if (!(f.bounded_analytic() && w.kind() == Weight::Kind::dist)) {
        try {
            const NormEstimate ro = ro_constant_estimate(f, w, points, radius_fractions);
            k = ro.value;
            ro_flagged = ro.unbounded_flag;
            k_route = "K=" + format_double(k) + " (RO estimate)";
        } catch (const precondition_error& e) {
            k = 0.0;
            ro_unsampleable = true;
            ro_failure = e.what();
            k_route = "K unavailable";
        }
    }

    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(points.size() * (points.size() - 1) / 2);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            pairs.emplace_back(points[i], points[j]);
    const NormEstimate holder = holder_norm_estimate(f, phi, pairs);

    std::ostringstream meta;
    meta << "points=" << points.size() << ", all-pairs=" << pairs.size() << ", " << k_route
         << ", holder=" << format_double(holder.value);

    TheoremReport r = make_report("converse_strong", left, A * k * holder.value, A * k, "A*K",
                                  describe(f, w, phi), meta.str(), f.has_derivative_oracle());

    double probe_coarse = 0.0, probe_fine = 0.0;
    bool probed = false;
    try {
        probe_coarse = holder_boundary_probe(f, phi, 1e-2);
        probe_fine = holder_boundary_probe(f, phi, 1e-4);
        probed = true;
    } catch (const wmg_error&) {
        r.metadata += ", boundary probe unavailable";
    }
    if (probed) {
        r.metadata += ", probe(1e-2)=" + format_double(probe_coarse) + ", probe(1e-4)=" +
                      format_double(probe_fine);
        if (probe_coarse > 0.0 && probe_fine >= 2.0 * probe_coarse) {
            r.status = TheoremReport::Status::hypothesis_unmet;
            r.metadata += ", holder ratio diverges toward the boundary (f outside the class)";
        }
    }
    if (ro_flagged && r.status != TheoremReport::Status::hypothesis_unmet) {
        r.status = TheoremReport::Status::hypothesis_unmet;
        r.metadata += ", RO estimate saw zero oscillation with positive dstar";
    }
    if (ro_unsampleable) {
        r.status = TheoremReport::Status::hypothesis_unmet;
        r.metadata += ", RO hypothesis not sampleable (" + ro_failure + ")";
    }
    return r;
}

std::pair<TheoremReport, TheoremReport> verify_unit_ball_corollary(
    const Mapping& f, double alpha, const std::vector<std::pair<Point, Point>>& pairs,
    const std::vector<Point>& points, double h) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw invalid_input_error("unit-ball corollary needs alpha in (0, 1)");
    if (!f.has_derivative_oracle())
        throw precondition_error("unit-ball corollary needs a derivative oracle");
    if (points.empty()) throw invalid_input_error("verify_unit_ball_corollary needs points");

    const Majorant phi = Majorant::power(alpha);
    const Domain& dom = f.source();
    double c_bloch = 0.0;
    for (const auto& x : points) {
        const double v = std::pow(dom.boundary_distance(x), 1.0 - alpha) * f.derivative_norm(x);
        c_bloch = std::max(c_bloch, v);
    }
    const double c_holder = holder_norm_estimate(f, phi, pairs).value;

    std::ostringstream meta;
    meta << "alpha=" << format_double(alpha) << ", pairs=" << pairs.size() << ", points="
         << points.size() << ", h=" << format_double(h) << ", C=" << format_double(c_bloch)
         << ", C'=" << format_double(c_holder);
    const std::string inst = f.name() + ", phi=" + phi.name() + ", domain=" + dom.kind();

    TheoremReport fwd = make_report("unit_ball_forward", c_holder, (4.0 / alpha) * c_bloch,
                                    4.0 / alpha, "4/alpha", inst, meta.str(), true);
    TheoremReport conv = make_report("unit_ball_converse", c_bloch, (2.0 / alpha) * c_holder,
                                     2.0 / alpha, "2/alpha", inst, meta.str(), true);
    return {fwd, conv};
}

QProfile q_profile(const Mapping& f, const Weight& w, const Majorant& phi,
                   const std::vector<Point>& points) {
    if (points.empty()) throw invalid_input_error("q_profile needs sample points");
    const auto grid = weight_grid(w, points);
    const AxiomReport axioms = check_majorant_axioms(phi, grid);
    if (!axioms.check("3").pass)
        throw precondition_error("phi' is not nonincreasing on the sampled weight values");
    if (!(phi.deriv(grid.back()) > 0.0))
        throw degenerate_majorant_error("phi' is not positive on the sampled weight values");

    QProfile out;
    out.points_used = points.size();
    out.witness = points.front();
    auto consider = [&](const Point& x) {
        const double denom = phi.deriv(w.eval(x));
        if (!(denom > 0.0))
            throw degenerate_majorant_error("phi' vanishes at w(" + x.str() + ")");
        const double q = dstar_estimate(f, x).value / denom;
        if (q > out.max_q) {
            out.max_q = q;
            out.witness = x;
        }
        return q;
    };
    for (const auto& x : points) consider(x);

    const Domain& dom = f.source();
    const auto box = dom.bounding_box();
    if (box) {
        Point center = box->lo;
        double reach = 0.0;
        for (int i = 0; i < center.dim(); ++i) {
            center[i] = 0.5 * (box->lo[i] + box->hi[i]);
            reach += (box->hi[i] - box->lo[i]) * (box->hi[i] - box->lo[i]);
        }
        reach = 0.5 * std::sqrt(reach);
        const auto fan =
            sphere_directions(dom.dimension(), dstar_default_directions(dom.dimension()));
        for (double bd : {1e-1, 1e-2, 1e-3, 1e-4}) {
            double scale_max = 0.0;
            for (const auto& e : fan) {
                try {
                    const Point p =
                        push_to_boundary_distance(dom, fan_anchor(dom, center, e, reach), bd);
                    scale_max = std::max(scale_max, consider(p));
                } catch (const wmg_error&) {
                    continue;
                }
            }
            out.boundary_profile.push_back({bd, scale_max});
        }
    }
    return out;
}

TheoremReport verify_image_curve_lemma(const Mapping& f, const Curve& gamma) {
    const double len = curve_length(gamma);
    std::vector<Point> refined;
    refined.push_back(gamma.vertices().front());
    if (len > 0.0) {
        const double target = len / 1024.0;
        for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
            const Point& a = gamma.vertices()[i];
            const Point& b = gamma.vertices()[i + 1];
            const double d = distance(a, b);
            const int n = std::max(1, static_cast<int>(std::ceil(d / target)));
            for (int k = 1; k <= n; ++k) refined.push_back(a + (static_cast<double>(k) / n) * (b - a));
        }
    }

    std::vector<Point> image;
    image.reserve(refined.size());
    double sup_dstar = 0.0;
    for (const auto& v : refined) {
        image.push_back(f.evaluate(v));
        sup_dstar = std::max(sup_dstar, dstar_estimate(f, v).value);
    }
    const double left = curve_length(Curve(image));

    std::ostringstream meta;
    meta << "vertices=" << gamma.size() << ", refined=" << refined.size() << ", length="
         << format_double(len);
    return make_report("image_curve", left, sup_dstar * len, sup_dstar, "sup D*",
                       f.name() + " on " + f.source().kind(), meta.str(),
                       f.has_derivative_oracle());
}

} // namespace wmg
