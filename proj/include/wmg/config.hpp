#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmg/domains.hpp"
#include "wmg/estimators.hpp"
#include "wmg/majorant.hpp"

namespace wmg {

/// Minimal INI reader: [section] headers, key = value lines, '#'/';' comments.
/// Keys before the first header live in the "" section (seed, h, tol).
/// All lookup failures throw invalid_input_error naming the key.
class ConfigFile {
public:
    static ConfigFile load(const std::string& path);
    static ConfigFile parse(const std::string& text, std::string origin = "<inline>");

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) const;
    std::size_t get_size(const std::string& section, const std::string& key,
                         std::size_t fallback) const;
    /// Comma-separated doubles.
    std::vector<double> get_list(const std::string& section, const std::string& key) const;
    std::vector<double> get_list(const std::string& section, const std::string& key,
                                 const std::vector<double>& fallback) const;
    /// Comma-separated words.
    std::vector<std::string> get_words(const std::string& section, const std::string& key,
                                       const std::vector<std::string>& fallback) const;

    const std::string& origin() const { return origin_; }

private:
    std::map<std::string, std::map<std::string, std::string>> data_;
    std::string origin_;
};

DomainPtr build_domain(const ConfigFile& cfg);
Weight build_weight(const ConfigFile& cfg, DomainPtr domain);
Majorant build_majorant(const ConfigFile& cfg);
/// Built-in analytic kinds insist the configured domain is the unit disk;
/// affine and registry mappings only need matching dimensions.
Mapping build_mapping(const ConfigFile& cfg, const Domain& domain);

struct SampleSettings {
    std::size_t points = 100;
    std::size_t pairs = 100;
    std::size_t geodesic_pairs = 100;  // default min(pairs, 200)
    double min_boundary_distance = 0.02;
    std::optional<Box> box;
    std::vector<double> radius_fractions{0.5, 0.25};
};

SampleSettings build_samples(const ConfigFile& cfg, const Domain& domain);

Point parse_point(const std::string& text);  // "0.3, -0.1"

} // namespace wmg
