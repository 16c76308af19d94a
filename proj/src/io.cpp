#include "bifrac/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace bifrac {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void write_path_csv(std::ostream& os, const SamplePath& path) {
    os << "j,t,x1,x2\n";
    os << std::setprecision(17);
    for (int j = 1; j <= path.n; ++j)
        os << j << ',' << static_cast<double>(j) / path.n << ',' << path.x1[j - 1]
           << ',' << path.x2[j - 1] << '\n';
}

SamplePath read_path_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("path CSV: empty file");
    std::vector<double> x1, x2;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 4)
            throw std::runtime_error("path CSV line " + std::to_string(lineno) +
                                     ": expected 4 fields, got " +
                                     std::to_string(fields.size()));
        try {
            x1.push_back(std::stod(fields[2]));
            x2.push_back(std::stod(fields[3]));
        } catch (const std::exception&) {
            throw std::runtime_error("path CSV line " + std::to_string(lineno) +
                                     ": non-numeric value");
        }
    }
    SamplePath path;
    path.n = static_cast<int>(x1.size());
    path.x1 = Eigen::Map<Eigen::VectorXd>(x1.data(), path.n);
    path.x2 = Eigen::Map<Eigen::VectorXd>(x2.data(), path.n);
    return path;
}

nlohmann::json estimate_to_json(const JointEstimate& est, const SamplePath& path,
                                int m, const std::string& estimator_kind) {
    nlohmann::json j;
    j["n"] = path.n;
    j["m"] = m;
    j["estimator_kind"] = estimator_kind;
    j["alpha11_hat"] = est.alpha11_hat;
    j["alpha22_hat"] = est.alpha22_hat;
    j["nu11_hat"] = est.nu11_hat;
    j["nu22_hat"] = est.nu22_hat;
    j["dim_hat"] = est.dim_hat;
    std::vector<std::vector<double>> zb(2);
    for (int c = 1; c <= 2; ++c)
        for (int u = 1; u <= m; ++u) zb[c - 1].push_back(zbar(path, u, c));
    j["zbar"] = zb;
    return j;
}

nlohmann::json phi0_to_json(const Phi0Matrix& phi) {
    nlohmann::json j;
    j["m"] = phi.m;
    j["max_truncation"] = phi.max_truncation;
    j["max_tail_bound"] = phi.max_tail_bound;
    auto block = [&](int a, int b) {
        std::vector<std::vector<double>> rows(phi.m, std::vector<double>(phi.m));
        const Eigen::MatrixXd blk = phi.block(a, b);
        for (int u = 0; u < phi.m; ++u)
            for (int v = 0; v < phi.m; ++v) rows[u][v] = blk(u, v);
        return rows;
    };
    j["phi0_11"] = block(1, 1);
    j["phi0_22"] = block(2, 2);
    j["phi0_12"] = block(1, 2);
    return j;
}

nlohmann::json law_to_json(const AsymptoticLaw& law) {
    nlohmann::json j;
    j["covariance"] = {{law.covariance(0, 0), law.covariance(0, 1)},
                       {law.covariance(1, 0), law.covariance(1, 1)}};
    j["correlation"] = law.correlation;
    return j;
}

nlohmann::json rates_to_json(const RateExponents& r) {
    nlohmann::json j;
    j["bias"] = {r.bias1, r.bias2};
    j["mse"] = {r.mse11, r.mse22};
    j["cross"] = r.cross;
    j["cross_faster_than_n1"] = r.cross_faster_than_n1;
    j["cross_strict_prediction"] = r.cross_strict_prediction;
    return j;
}

void write_summary_csv(std::ostream& os, const ExperimentSummary& summary) {
    os << "n,metric,component,value\n";
    os << std::setprecision(17);
    for (const auto& per : summary.per_n) {
        for (int i = 0; i < 2; ++i) {
            const int c = i + 1;
            os << per.n << ",mean," << c << ',' << per.mean[i] << '\n';
            os << per.n << ",bias," << c << ',' << per.bias[i] << '\n';
            os << per.n << ",variance," << c << ',' << per.variance[i] << '\n';
            os << per.n << ",ci_lo," << c << ',' << per.ci_lo[i] << '\n';
            os << per.n << ",ci_hi," << c << ',' << per.ci_hi[i] << '\n';
        }
        os << per.n << ",cross_covariance,0," << per.cross_covariance << '\n';
        os << per.n << ",included,0," << per.included << '\n';
        os << per.n << ",excluded,0," << per.excluded << '\n';
    }
}

nlohmann::json summary_to_json(const ExperimentSummary& summary) {
    nlohmann::json j;
    j["truth"] = summary.truth;
    auto fit = [](const RateFit& f) {
        return nlohmann::json{{"slope", f.slope},
                              {"intercept", f.intercept},
                              {"r_squared", f.r_squared},
                              {"used_points", f.used_points},
                              {"dropped_points", f.dropped_points}};
    };
    j["bias_fit"] = {fit(summary.bias_fit[0]), fit(summary.bias_fit[1])};
    j["variance_fit"] = {fit(summary.variance_fit[0]), fit(summary.variance_fit[1])};
    j["cross_fit"] = fit(summary.cross_fit);
    for (const auto& per : summary.per_n) {
        nlohmann::json p;
        p["n"] = per.n;
        p["included"] = per.included;
        p["excluded"] = per.excluded;
        p["mean"] = per.mean;
        p["bias"] = per.bias;
        p["variance"] = per.variance;
        p["cross_covariance"] = per.cross_covariance;
        p["ci_lo"] = per.ci_lo;
        p["ci_hi"] = per.ci_hi;
        j["per_n"].push_back(p);
    }
    return j;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    return s != sections.end() && s->second.count(key) > 0;
}

std::string ConfigFile::get(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw std::runtime_error("config: missing key '" + key + "' in section [" +
                                 section + "]");
    return sections.at(section).at(key);
}

std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    const std::string v = get(section, key);
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' in section [" + section +
                                 "] is not a number: '" + v + "'");
    }
}

double ConfigFile::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

ConfigFile parse_config(std::istream& is) {
    ConfigFile out;
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw std::runtime_error("config line " + std::to_string(lineno) +
                                         ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            out.sections[section];
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        if (section.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": key outside any section");
        out.sections[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return out;
}

ConfigFile parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open '" + path + "'");
    return parse_config(is);
}

MaternParams matern_from_config(const ConfigFile& config) {
    MaternParams p;
    p.nu11 = config.get_double("model", "nu11");
    p.nu22 = config.get_double("model", "nu22");
    p.nu12 = config.get_double("model", "nu12");
    p.a11 = config.get_double_or("model", "a11", 1.0);
    p.a22 = config.get_double_or("model", "a22", 1.0);
    p.a12 = config.get_double_or("model", "a12", 1.0);
    p.sigma1 = config.get_double_or("model", "sigma1", 1.0);
    p.sigma2 = config.get_double_or("model", "sigma2", 1.0);
    p.rho = config.get_double_or("model", "rho", 0.5);
    return p;
}

} // namespace bifrac
