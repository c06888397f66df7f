#include "wmg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wmg/errors.hpp"

namespace wmg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw invalid_input_error("config: '" + s + "' is not a number (" + what + ")");
    }
}

} // namespace

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

ConfigFile ConfigFile::parse(const std::string& text, std::string origin) {
    ConfigFile cfg;
    cfg.origin_ = std::move(origin);
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw invalid_input_error("config " + cfg.origin_ + ":" + std::to_string(lineno) +
                                          ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            cfg.data_[section];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw invalid_input_error("config " + cfg.origin_ + ":" + std::to_string(lineno) +
                                      ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw invalid_input_error("config " + cfg.origin_ + ":" + std::to_string(lineno) +
                                      ": empty key");
        cfg.data_[section][key] = trim(line.substr(eq + 1));
    }
    return cfg;
}

bool ConfigFile::has_section(const std::string& section) const {
    return data_.count(section) > 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    return it != data_.end() && it->second.count(key) > 0;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    if (it == data_.end() || it->second.count(key) == 0)
        throw invalid_input_error("config " + origin_ + ": missing key '" + key + "' in section [" +
                                  section + "]");
    return it->second.at(key);
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    return to_double(get_string(section, key), "[" + section + "] " + key);
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

std::uint64_t ConfigFile::get_u64(const std::string& section, const std::string& key,
                                  std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    const std::string s = get_string(section, key);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw invalid_input_error("config: '" + s + "' is not an unsigned integer ([" + section +
                                  "] " + key + ")");
    return v;
}

std::size_t ConfigFile::get_size(const std::string& section, const std::string& key,
                                 std::size_t fallback) const {
    return static_cast<std::size_t>(get_u64(section, key, fallback));
}

std::vector<double> ConfigFile::get_list(const std::string& section, const std::string& key) const {
    std::vector<double> out;
    for (const auto& tok : split(get_string(section, key), ','))
        out.push_back(to_double(tok, "[" + section + "] " + key));
    return out;
}

std::vector<double> ConfigFile::get_list(const std::string& section, const std::string& key,
                                         const std::vector<double>& fallback) const {
    return has(section, key) ? get_list(section, key) : fallback;
}

std::vector<std::string> ConfigFile::get_words(const std::string& section, const std::string& key,
                                               const std::vector<std::string>& fallback) const {
    if (!has(section, key)) return fallback;
    auto words = split(get_string(section, key), ',');
    words.erase(std::remove(words.begin(), words.end(), std::string()), words.end());
    return words;
}

Point parse_point(const std::string& text) {
    std::vector<double> coords;
    for (const auto& tok : split(text, ','))
        coords.push_back(to_double(tok, "point coordinate"));
    return Point(coords);
}

DomainPtr build_domain(const ConfigFile& cfg) {
    const std::string kind = cfg.get_string("domain", "kind");
    if (kind == "disk") return make_unit_disk();
    if (kind == "ball") return make_unit_ball(static_cast<int>(cfg.get_size("domain", "dim", 3)));
    if (kind == "half_plane") return make_half_plane();
    if (kind == "rectangle") {
        return make_rectangle(Point(cfg.get_list("domain", "lo")),
                              Point(cfg.get_list("domain", "hi")));
    }
    if (kind == "l_shape") return make_l_shape();
    if (kind == "annulus")
        return make_annulus(cfg.get_double("domain", "inner"), cfg.get_double("domain", "outer"));
    throw invalid_input_error("config: unknown domain kind '" + kind + "'");
}

Weight build_weight(const ConfigFile& cfg, DomainPtr domain) {
    const std::string kind = cfg.get_string("weight", "kind");
    if (kind == "constant") return Weight::constant(domain, cfg.get_double("weight", "c", 1.0));
    if (kind == "dist") return Weight::dist(domain);
    if (kind == "dist_pow") return Weight::dist_pow(domain, cfg.get_double("weight", "alpha"));
    if (kind == "reciprocal_dist") return Weight::reciprocal_dist(domain);
    throw invalid_input_error("config: unknown weight kind '" + kind + "'");
}

Majorant build_majorant(const ConfigFile& cfg) {
    const std::string kind = cfg.get_string("majorant", "kind", "power");
    if (kind == "power") return Majorant::power(cfg.get_double("majorant", "alpha"));
    throw invalid_input_error("config: unknown majorant kind '" + kind +
                              "' (user majorants are code-only)");
}

Mapping build_mapping(const ConfigFile& cfg, const Domain& domain) {
    const std::string kind = cfg.get_string("mapping", "kind");
    auto require_disk = [&] {
        if (domain.kind() != "unit-disk")
            throw invalid_input_error("config: mapping kind '" + kind +
                                      "' lives on the unit disk, but the domain is " +
                                      domain.kind());
    };
    if (kind == "power_alpha") {
        require_disk();
        return Mapping::power_alpha(cfg.get_double("mapping", "alpha"));
    }
    if (kind == "monomial") {
        require_disk();
        return Mapping::monomial(static_cast<int>(cfg.get_size("mapping", "k", 2)));
    }
    if (kind == "log_branch") {
        require_disk();
        return Mapping::log_branch();
    }
    if (kind == "affine") {
        // rows split on '|' since ';' would start an inline comment
        std::vector<std::vector<double>> rows;
        for (const auto& row : split(cfg.get_string("mapping", "matrix"), '|')) {
            std::vector<double> r;
            for (const auto& tok : split(row, ','))
                r.push_back(to_double(tok, "[mapping] matrix"));
            rows.push_back(std::move(r));
        }
        Point offset = parse_point(cfg.get_string("mapping", "offset"));
        // share the caller's geometry: affine sources are whatever [domain] says
        DomainPtr src = build_domain(cfg);
        return Mapping::affine(rows, offset, src);
    }
    if (kind == "user") {
        Mapping f = make_registered_mapping(cfg.get_string("mapping", "name"));
        if (f.source().dimension() != domain.dimension())
            throw invalid_input_error("config: registered mapping '" + f.name() +
                                      "' has source dimension " +
                                      std::to_string(f.source().dimension()) +
                                      ", domain has " + std::to_string(domain.dimension()));
        return f;
    }
    throw invalid_input_error("config: unknown mapping kind '" + kind + "'");
}

SampleSettings build_samples(const ConfigFile& cfg, const Domain& domain) {
    SampleSettings s;
    s.points = cfg.get_size("samples", "points", 100);
    s.pairs = cfg.get_size("samples", "pairs", 100);
    s.geodesic_pairs = cfg.get_size("samples", "geodesic_pairs", std::min<std::size_t>(s.pairs, 200));
    s.min_boundary_distance = cfg.get_double("samples", "min_boundary_distance", 0.02);
    s.radius_fractions = cfg.get_list("samples", "radius_fractions", {0.5, 0.25});
    if (cfg.has("samples", "box")) {
        const auto v = cfg.get_list("samples", "box");
        if (v.size() % 2 != 0 || v.empty())
            throw invalid_input_error("config: [samples] box needs lo coords then hi coords");
        const std::size_t d = v.size() / 2;
        s.box = Box{Point(std::vector<double>(v.begin(), v.begin() + d)),
                    Point(std::vector<double>(v.begin() + d, v.end()))};
    }
    if (!domain.bounding_box() && !s.box)
        throw invalid_input_error("config: unbounded domain '" + domain.kind() +
                                  "' needs an explicit [samples] box");
    return s;
}

} // namespace wmg
