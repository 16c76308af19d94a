#pragma once

#include "bifrac/asymptotics.hpp"
#include "bifrac/estimator.hpp"
#include "bifrac/montecarlo.hpp"
#include "bifrac/simulate.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <string>

namespace bifrac {

/// CSV dialect everywhere: comma separator, '.' decimal, header row, LF, UTF-8.
void write_path_csv(std::ostream& os, const SamplePath& path);

/// Parses a path CSV with columns (j, t, x1, x2). Throws std::runtime_error
/// with a line diagnostic on malformed input.
SamplePath read_path_csv(std::istream& is);

nlohmann::json estimate_to_json(const JointEstimate& est, const SamplePath& path,
                                int m, const std::string& estimator_kind);

nlohmann::json phi0_to_json(const Phi0Matrix& phi);
nlohmann::json law_to_json(const AsymptoticLaw& law);
nlohmann::json rates_to_json(const RateExponents& rates);

/// Long-format summary: n, metric, component, value.
void write_summary_csv(std::ostream& os, const ExperimentSummary& summary);

nlohmann::json summary_to_json(const ExperimentSummary& summary);

/// Sectioned key=value configuration file ('#'/';' comments).
struct ConfigFile {
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
};

/// Throws std::runtime_error with a line number on parse errors.
ConfigFile parse_config(std::istream& is);
ConfigFile parse_config_file(const std::string& path);

/// Reads the [model] section into Matern parameters.
MaternParams matern_from_config(const ConfigFile& config);

} // namespace bifrac
