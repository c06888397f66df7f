#include "wmg/report_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>

#include "wmg/config.hpp"
#include "wmg/errors.hpp"
#include "wmg/sampling.hpp"

namespace wmg {

json json_of(const Point& p) {
    json a = json::array();
    for (double c : p.coords()) a.push_back(c);
    return a;
}

json json_of(const GeodesicResult& r) {
    json j;
    j["value"] = r.value;
    j["resolution"] = r.resolution;
    j["refined"] = r.refined;
    j["vertices"] = r.curve.size();
    return j;
}

json json_of(const ConditionReport& r) {
    json j;
    j["M_observed"] = r.M_observed;
    j["worst_pair"] = json::array({json_of(r.worst_pair.first), json_of(r.worst_pair.second)});
    j["pairs_tested"] = r.pairs_tested;
    j["ratios"] = r.ratios;
    j["skipped_coincident"] = r.skipped_coincident;
    j["divergence_suspected"] = r.divergence_suspected;
    return j;
}

json json_of(const NormEstimate& e) {
    json j;
    j["value"] = e.value;
    json w = json::array();
    for (const auto& p : e.witness) w.push_back(json_of(p));
    j["witness"] = w;
    j["samples_used"] = e.samples_used;
    j["parameters"] = e.parameters;
    if (e.skipped_coincident > 0) j["skipped_coincident"] = e.skipped_coincident;
    if (e.unbounded_flag) j["unbounded_flag"] = true;
    return j;
}

json json_of(const TheoremReport& r) {
    json j;
    j["theorem"] = r.theorem_id;
    j["status"] = to_string(r.status);
    j["left"] = r.left;
    j["right"] = r.right;
    j["constant"] = r.constant_used;
    j["constant_label"] = r.constant_label;
    if (r.slack)
        j["slack"] = *r.slack;
    else
        j["slack"] = nullptr;
    j["tol"] = r.tol;
    j["instance"] = r.instance;
    j["metadata"] = r.metadata;
    j["oracle_backed"] = r.oracle_backed;
    return j;
}

json json_of(const QProfile& p) {
    json j;
    j["max_q"] = p.max_q;
    j["witness"] = json_of(p.witness);
    json prof = json::array();
    for (const auto& s : p.boundary_profile) {
        json e;
        e["boundary_distance"] = s.boundary_distance;
        e["max_q"] = s.max_q;
        prof.push_back(e);
    }
    j["boundary_profile"] = prof;
    j["points_used"] = p.points_used;
    return j;
}

std::string curve_csv(const Curve& c) {
    std::string out;
    for (const auto& v : c.vertices()) {
        for (int i = 0; i < v.dim(); ++i) {
            if (i > 0) out += ',';
            out += format_double(v[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input_error("cannot write '" + path + "'");
    out << text;
}

VerifyOutcome run_verify(const std::string& config_path, const std::string& out_dir) {
    const ConfigFile cfg = ConfigFile::load(config_path);
    DomainPtr domain = build_domain(cfg);
    const Weight w = build_weight(cfg, domain);
    const Majorant phi = build_majorant(cfg);
    const Mapping f = build_mapping(cfg, *domain);
    const SampleSettings s = build_samples(cfg, *domain);

    const std::uint64_t seed = cfg.get_u64("", "seed", 1);
    const double h = cfg.get_double("", "h", 0.02);
    const double tol = cfg.get_double("", "tol", kSlackTol);
    if (!(h > 0.0)) throw invalid_input_error("config: h must be positive");
    if (!(tol >= 0.0)) throw invalid_input_error("config: tol must be nonnegative");

    const bool unit_ball_ready = f.has_derivative_oracle() && phi.kind() == Majorant::Kind::power &&
                                 phi.alpha() > 0.0 && phi.alpha() < 1.0;
    std::vector<std::string> theorems;
    if (cfg.has("verify", "theorems")) {
        theorems = cfg.get_words("verify", "theorems", {});
    } else {
        theorems = {"forward", "converse_strong", "q_profile"};
        if (unit_ball_ready) theorems.insert(theorems.begin() + 2, "unit_ball");
    }
    for (const auto& t : theorems) {
        if (t != "forward" && t != "converse_strong" && t != "unit_ball" && t != "q_profile")
            throw invalid_input_error("config: unknown theorem '" + t + "'");
        if (t == "unit_ball" && !unit_ball_ready)
            throw invalid_input_error(
                "config: unit_ball needs a mapping with a derivative oracle and a power "
                "majorant with alpha in (0, 1)");
    }
    auto enabled = [&theorems](const char* name) {
        return std::find(theorems.begin(), theorems.end(), name) != theorems.end();
    };

    double a_const;
    if (cfg.has("verify", "A")) {
        a_const = cfg.get_double("verify", "A");
    } else if (phi.kind() == Majorant::Kind::power) {
        a_const = 2.0 / phi.alpha();  // the theorem's own constant for t^alpha
    } else {
        throw invalid_input_error("config: [verify] A is required for non-power majorants");
    }

    auto pairs = sample_domain_pairs(*domain, s.pairs, derive_seed(seed, 1),
                                     s.min_boundary_distance, s.box);
    auto points = sample_domain_points(*domain, s.points, derive_seed(seed, 2),
                                       s.min_boundary_distance, s.box);
    std::vector<std::pair<Point, Point>> gpairs(
        pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(
                                           std::min<std::size_t>(s.geodesic_pairs, pairs.size())));

    // Independent instances; assembly below keeps config order.
    std::future<TheoremReport> fwd, conv;
    std::future<std::pair<TheoremReport, TheoremReport>> ub;
    std::future<QProfile> prof;
    if (enabled("forward"))
        fwd = std::async(std::launch::async,
                         [&] { return verify_forward(f, w, phi, gpairs, points, h); });
    if (enabled("converse_strong"))
        conv = std::async(std::launch::async, [&] {
            return verify_converse_strong(f, w, phi, a_const, points, s.radius_fractions);
        });
    if (enabled("unit_ball"))
        ub = std::async(std::launch::async, [&] {
            return verify_unit_ball_corollary(f, phi.alpha(), pairs, points, h);
        });
    if (enabled("q_profile"))
        prof = std::async(std::launch::async, [&] { return q_profile(f, w, phi, points); });

    auto finalize = [tol](TheoremReport r) {
        r.tol = tol;
        if (r.status != TheoremReport::Status::hypothesis_unmet)
            r.status = (r.left <= r.right * (1.0 + tol)) ? TheoremReport::Status::pass
                                                         : TheoremReport::Status::fail;
        return r;
    };

    std::vector<TheoremReport> reports;
    if (fwd.valid()) reports.push_back(finalize(fwd.get()));
    if (conv.valid()) reports.push_back(finalize(conv.get()));
    if (ub.valid()) {
        auto [a, b] = ub.get();
        reports.push_back(finalize(std::move(a)));
        reports.push_back(finalize(std::move(b)));
    }
    std::optional<QProfile> profile;
    if (prof.valid()) profile = prof.get();

    json j;
    j["config"] = config_path;
    j["seed"] = seed;
    j["h"] = h;
    j["tol"] = tol;
    j["domain"] = domain->kind();
    j["weight"] = w.name();
    j["majorant"] = phi.name();
    j["mapping"] = f.name();
    {
        json sj;
        sj["points"] = s.points;
        sj["pairs"] = s.pairs;
        sj["geodesic_pairs"] = gpairs.size();
        sj["min_boundary_distance"] = s.min_boundary_distance;
        sj["radius_fractions"] = s.radius_fractions;
        j["samples"] = sj;
    }
    j["A"] = a_const;
    json rep = json::array();
    for (const auto& r : reports) rep.push_back(json_of(r));
    j["theorems"] = rep;
    if (profile) j["q_profile"] = json_of(*profile);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string stem = fs::path(config_path).stem().string();

    VerifyOutcome out;
    out.json_path = (fs::path(out_dir) / (stem + ".json")).string();
    out.summary_path = (fs::path(out_dir) / "summary.csv").string();
    write_text_file(out.json_path, j.dump(2) + "\n");

    std::string csv = "theorem,left,right,slack,status\n";
    for (const auto& r : reports) {
        VerifySummaryRow row;
        row.theorem_id = r.theorem_id;
        row.left = r.left;
        row.right = r.right;
        row.slack = r.slack;
        row.status = to_string(r.status);
        out.rows.push_back(row);
        csv += r.theorem_id + "," + format_double(r.left) + "," + format_double(r.right) + "," +
               (r.slack ? format_double(*r.slack) : std::string()) + "," + row.status + "\n";
        if (r.status == TheoremReport::Status::fail) out.exit_code = 1;
    }
    write_text_file(out.summary_path, csv);
    return out;
}

} // namespace wmg
