#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wmg/config.hpp"
#include "wmg/errors.hpp"
#include "wmg/report_io.hpp"
#include "wmg/sampling.hpp"

using namespace wmg;

namespace {

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

int cmd_geodesic(const std::string& cfg_path, const std::string& from_s, const std::string& to_s,
                 double h_override, const std::string& out_path, const std::string& curve_path) {
    const ConfigFile cfg = ConfigFile::load(cfg_path);
    DomainPtr domain = build_domain(cfg);
    const Weight w = build_weight(cfg, domain);
    const double h = h_override > 0.0 ? h_override : cfg.get_double("", "h", 0.02);
    const Point x = parse_point(from_s), y = parse_point(to_s);

    const GeodesicResult r = weighted_distance_upper(w, x, y, h);
    json j = json_of(r);
    j["from"] = json_of(x);
    j["to"] = json_of(y);
    j["domain"] = domain->kind();
    j["weight"] = w.name();
    emit(j, out_path);
    if (!curve_path.empty()) write_text_file(curve_path, curve_csv(r.curve));
    return 0;
}

int cmd_condition(const std::string& cfg_path, const std::string& out_path) {
    const ConfigFile cfg = ConfigFile::load(cfg_path);
    DomainPtr domain = build_domain(cfg);
    const Weight w = build_weight(cfg, domain);
    const Majorant phi = build_majorant(cfg);
    const SampleSettings s = build_samples(cfg, *domain);
    const std::uint64_t seed = cfg.get_u64("", "seed", 1);
    const double h = cfg.get_double("", "h", 0.02);

    auto pairs = sample_domain_pairs(*domain, s.pairs, derive_seed(seed, 1),
                                     s.min_boundary_distance, s.box);
    if (pairs.size() > s.geodesic_pairs) pairs.resize(s.geodesic_pairs);
    const ConditionReport rep = check_extension_condition(w, phi, pairs, h);

    json j = json_of(rep);
    j["seed"] = seed;
    j["h"] = h;
    j["domain"] = domain->kind();
    j["weight"] = w.name();
    j["majorant"] = phi.name();
    emit(j, out_path);
    return 0;
}

int cmd_verify(const std::string& cfg_path, const std::string& out_dir) {
    const VerifyOutcome out = run_verify(cfg_path, out_dir);
    for (const auto& row : out.rows) {
        std::printf("%-20s left=%-12s right=%-12s slack=%-10s %s\n", row.theorem_id.c_str(),
                    format_double(row.left).c_str(), format_double(row.right).c_str(),
                    row.slack ? format_double(*row.slack).c_str() : "-", row.status.c_str());
    }
    std::printf("report: %s\nsummary: %s\n", out.json_path.c_str(), out.summary_path.c_str());
    return out.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for weighted metrics, majorants and norm estimates"};
    app.require_subcommand(1);

    std::string cfg_path, from_s, to_s, out_path, curve_path, out_dir = "reports";
    double h_override = 0.0;

    auto* geo = app.add_subcommand("geodesic", "upper-bound the weighted distance between two points");
    geo->add_option("--config", cfg_path, "config with [domain] and [weight]")->required();
    geo->add_option("--from", from_s, "start point, comma-separated coordinates")->required();
    geo->add_option("--to", to_s, "end point, comma-separated coordinates")->required();
    geo->add_option("--resolution", h_override, "grid resolution override");
    geo->add_option("--out", out_path, "JSON output path (default stdout)");
    geo->add_option("--curve-csv", curve_path, "also write the witness curve as CSV");

    auto* cond = app.add_subcommand("condition", "sampled extension-condition constant");
    cond->add_option("--config", cfg_path, "config with [domain], [weight], [majorant], [samples]")
        ->required();
    cond->add_option("--out", out_path, "JSON output path (default stdout)");

    auto* ver = app.add_subcommand("verify", "run the theorem checks from a config");
    ver->add_option("--config", cfg_path, "verification config")->required();
    ver->add_option("--out-dir", out_dir, "directory for <config>.json and summary.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (geo->parsed())
            return cmd_geodesic(cfg_path, from_s, to_s, h_override, out_path, curve_path);
        if (cond->parsed()) return cmd_condition(cfg_path, out_path);
        if (ver->parsed()) return cmd_verify(cfg_path, out_dir);
    } catch (const invalid_input_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const domain_violation_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const wmg_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
