#include "bifrac/asymptotics.hpp"
#include "bifrac/covariance.hpp"
#include "bifrac/estimator.hpp"
#include "bifrac/figures.hpp"
#include "bifrac/io.hpp"
#include "bifrac/montecarlo.hpp"
#include "bifrac/simulate.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// exit-code taxonomy: 0 ok, 1 config/parse, 2 invalid model, 3 numeric
// failure, 4 degenerate data
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalidModel = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitDegenerate = 4;

bifrac::MaternParams load_model(const std::string& config_path) {
    const bifrac::ConfigFile cfg = bifrac::parse_config_file(config_path);
    return bifrac::matern_from_config(cfg);
}

int cmd_validate(const std::string& config_path) {
    bifrac::MaternParams params;
    try {
        params = load_model(config_path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    }
    bool valid = true;
    try {
        const bifrac::LocalExpansion exp = bifrac::local_expansion(params);
        std::cout << "local expansion:\n"
                  << "  alpha11=" << exp.alpha11 << " alpha22=" << exp.alpha22
                  << " alpha12=" << exp.alpha12 << '\n'
                  << "  c11=" << exp.c11 << " c22=" << exp.c22 << " c12=" << exp.c12
                  << '\n'
                  << "  beta11=" << exp.beta11 << " beta22=" << exp.beta22
                  << " beta12=" << exp.beta12 << '\n';
        const auto v = bifrac::check_validity(exp);
        std::cout << "expansion validity: " << (v.valid ? "valid" : "INVALID: " + v.reason)
                  << '\n';
        valid = valid && v.valid;
        std::cout << "trajectory dimension: "
                  << bifrac::trajectory_dimension(exp.alpha11, exp.alpha22) << '\n';
        std::cout << "component graph dimensions: "
                  << bifrac::component_graph_dimension(exp.alpha11) << ", "
                  << bifrac::component_graph_dimension(exp.alpha22) << '\n';
    } catch (const std::exception& e) {
        std::cout << "expansion validity: INVALID: " << e.what() << '\n';
        valid = false;
    }
    try {
        const auto sv = bifrac::check_matern_validity(params);
        std::cout << "spectral validity: " << (sv.valid ? "valid" : "INVALID: " + sv.reason)
                  << '\n';
        valid = valid && sv.valid;
    } catch (const std::exception& e) {
        std::cout << "spectral validity: INVALID: " << e.what() << '\n';
        valid = false;
    }
    return valid ? kExitOk : kExitInvalidModel;
}

int cmd_simulate(const std::string& config_path, int n, std::uint64_t seed,
                 const std::string& out) {
    std::unique_ptr<bifrac::MaternModel> model;
    try {
        model = std::make_unique<bifrac::MaternModel>(load_model(config_path));
    } catch (const std::runtime_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid model: " << e.what() << '\n';
        return kExitInvalidModel;
    }
    try {
        const bifrac::SamplePath path = bifrac::simulate_path(*model, n, {seed, 0});
        std::ofstream os(out);
        if (!os) {
            std::cerr << "cannot write '" << out << "'\n";
            return kExitParse;
        }
        bifrac::write_path_csv(os, path);
        const double m1 = path.x1.mean(), m2 = path.x2.mean();
        std::cout << "wrote " << out << " (n=" << n << ")\n"
                  << "x1: mean=" << m1
                  << " var=" << (path.x1.array() - m1).square().sum() / (n - 1) << '\n'
                  << "x2: mean=" << m2
                  << " var=" << (path.x2.array() - m2).square().sum() / (n - 1) << '\n';
        return kExitOk;
    } catch (const bifrac::NotPositiveDefinite& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}

int cmd_estimate(const std::string& csv_path, int m, const std::string& kind,
                 const std::string& out) {
    bifrac::SamplePath path;
    try {
        std::ifstream is(csv_path);
        if (!is) throw std::runtime_error("cannot open '" + csv_path + "'");
        path = bifrac::read_path_csv(is);
        if (path.n < 2 * m + 1)
            throw std::runtime_error("need at least 2m+1 rows, got " +
                                     std::to_string(path.n));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    }
    try {
        const bifrac::WeightVector ols = bifrac::ols_weights(m);
        bifrac::JointEstimate est = bifrac::estimate_joint(path, ols, ols);
        if (kind == "gls") {
            const auto g1 = bifrac::gls_weights(m, path.n, est.nu11_hat);
            const auto g2 = bifrac::gls_weights(m, path.n, est.nu22_hat);
            est = bifrac::estimate_joint(path, g1, g2);
        }
        const json j = bifrac::estimate_to_json(est, path, m, kind);
        if (out.empty()) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::ofstream os(out);
            os << j.dump(2) << '\n';
        }
        return kExitOk;
    } catch (const bifrac::DegeneratePath& e) {
        std::cerr << "degenerate path (component " << e.component << "): " << e.what()
                  << '\n';
        return kExitDegenerate;
    }
}

int cmd_asymptotics(const std::string& config_path, int m, const std::string& out) {
    bifrac::LocalExpansion exp;
    try {
        exp = bifrac::local_expansion(load_model(config_path));
    } catch (const std::runtime_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid model: " << e.what() << '\n';
        return kExitInvalidModel;
    }
    const bifrac::Phi0Matrix phi = bifrac::phi0_matrix(exp, m);
    const bifrac::WeightVector w = bifrac::ols_weights(m);
    const bifrac::AsymptoticLaw law = bifrac::asymptotic_law(exp, w, w);
    json j;
    j["phi0"] = bifrac::phi0_to_json(phi);
    j["asymptotic_law"] = bifrac::law_to_json(law);
    j["rate_exponents"] = bifrac::rates_to_json(bifrac::rate_exponents(exp));
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream os(out);
        os << j.dump(2) << '\n';
    }
    return kExitOk;
}

struct ExperimentOverrides {
    int reps = 0;
    int m = 0;
    std::string kind;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

int cmd_experiment(const std::string& config_path, const std::string& out_dir,
                   bool dry_run, bool full_scale, const ExperimentOverrides& ov) {
    bifrac::ExperimentConfig config;
    json config_echo;
    try {
        const bifrac::ConfigFile cfg = bifrac::parse_config_file(config_path);
        const bifrac::MaternParams params = bifrac::matern_from_config(cfg);
        config.model = std::make_shared<bifrac::MaternModel>(params);
        config.replications =
            static_cast<int>(cfg.get_double_or("experiment", "replications", 300));
        config.m = static_cast<int>(cfg.get_double_or("experiment", "m", 50));
        config.base_seed =
            static_cast<std::uint64_t>(cfg.get_double_or("experiment", "seed", 1));
        std::string kind = cfg.get_or("experiment", "estimator", "gls");
        if (ov.reps > 0) config.replications = ov.reps;
        if (ov.m > 0) config.m = ov.m;
        if (ov.has_seed) config.base_seed = ov.seed;
        if (!ov.kind.empty()) kind = ov.kind;
        if (kind != "ols" && kind != "gls")
            throw std::runtime_error("config: estimator must be ols or gls");
        config.kind = kind == "gls" ? bifrac::EstimatorKind::GLS : bifrac::EstimatorKind::OLS;
        std::string nlist = cfg.get_or("experiment", "n_list", "200,400,600,800,1000");
        std::stringstream ss(nlist);
        std::string tok;
        config.n_list.clear();
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) config.n_list.push_back(std::stoi(tok));
        if (full_scale) {
            config.replications = 1000;
            config.n_list.clear();
            for (int n = 200; n <= 1000; n += 10) config.n_list.push_back(n);
        }
        config.validate();
        config_echo = {{"config_file", config_path},
                       {"replications", config.replications},
                       {"m", config.m},
                       {"seed", config.base_seed},
                       {"estimator", kind},
                       {"n_list", config.n_list}};
    } catch (const std::domain_error& e) {
        std::cerr << "invalid model: " << e.what() << '\n';
        return kExitInvalidModel;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    }

    if (dry_run) {
        std::cout << "planned runs (n, R, seed):\n";
        for (int n : config.n_list)
            std::cout << "  " << n << ' ' << config.replications << ' '
                      << config.base_seed << '\n';
        return kExitOk;
    }

    try {
        fs::create_directories(out_dir);
        const bifrac::ExperimentSummary summary = bifrac::run_experiment(config);
        {
            std::ofstream os(fs::path(out_dir) / "summary.csv");
            bifrac::write_summary_csv(os, summary);
        }
        {
            json j = bifrac::summary_to_json(summary);
            j["config"] = config_echo;
            std::ofstream os(fs::path(out_dir) / "summary.json");
            os << j.dump(2) << '\n';
        }
        bifrac::write_ci_panel_svg((fs::path(out_dir) / "ci.svg").string(), summary,
                                   "95% confidence intervals");
        bifrac::write_rates_panel_svg((fs::path(out_dir) / "rates.svg").string(), summary,
                                      "|bias| and variance decay");
        bifrac::write_cross_panel_svg((fs::path(out_dir) / "cross.svg").string(), summary,
                                      "|cross covariance| decay");
        std::cout << "cross-covariance slope: " << summary.cross_fit.slope << '\n'
                  << "variance slopes: " << summary.variance_fit[0].slope << ", "
                  << summary.variance_fit[1].slope << '\n'
                  << "outputs in " << out_dir << '\n';
        return kExitOk;
    } catch (const bifrac::NotPositiveDefinite& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bivariate fractal-index estimation toolkit"};
    app.require_subcommand(1);

    std::string config_path, out, csv_path, kind = "ols";
    int n = 1000, m = 0;
    std::uint64_t seed = 1;
    bool dry_run = false, full_scale = false;

    auto* validate = app.add_subcommand("validate", "check model validity");
    validate->add_option("--config", config_path, "config file")->required();

    auto* simulate = app.add_subcommand("simulate", "simulate one path to CSV");
    simulate->add_option("--config", config_path, "config file")->required();
    simulate->add_option("--n", n, "grid size");
    simulate->add_option("--seed", seed, "base seed");
    simulate->add_option("--out", out, "output CSV file")->required();

    auto* estimate = app.add_subcommand("estimate", "estimate indices from a path CSV");
    estimate->add_option("path", csv_path, "input path CSV")->required();
    estimate->add_option("--m", m, "number of dilations (default from n)");
    estimate->add_option("--kind", kind, "ols|gls")->check(CLI::IsMember({"ols", "gls"}));
    estimate->add_option("--out", out, "output JSON file (default stdout)");

    auto* asym = app.add_subcommand("asymptotics", "limiting covariance and rates");
    asym->add_option("--config", config_path, "config file")->required();
    asym->add_option("--m", m, "number of dilations")->required();
    asym->add_option("--out", out, "output JSON file (default stdout)");

    auto* experiment = app.add_subcommand("experiment", "replicated simulation study");
    experiment->add_option("--config", config_path, "config file")->required();
    experiment->add_option("--out", out, "output directory")->required();
    experiment->add_flag("--dry-run", dry_run, "print the planned runs only");
    experiment->add_flag("--full-scale", full_scale,
                         "R=1000 with n = 200,210,...,1000 (slow)");
    ExperimentOverrides ov;
    experiment->add_option("--reps", ov.reps, "override replication count");
    experiment->add_option("--m", ov.m, "override number of dilations");
    experiment->add_option("--kind", ov.kind, "override estimator kind")
        ->check(CLI::IsMember({"ols", "gls"}));
    auto* seed_opt = experiment->add_option("--seed", ov.seed, "override base seed");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return cmd_validate(config_path);
    if (simulate->parsed()) return cmd_simulate(config_path, n, seed, out);
    if (estimate->parsed()) {
        if (m == 0) {
            std::ifstream is(csv_path);
            if (is) {
                try {
                    m = bifrac::default_dilations(bifrac::read_path_csv(is).n);
                } catch (...) {
                    m = 2;
                }
            } else {
                m = 2;
            }
        }
        return cmd_estimate(csv_path, m, kind, out);
    }
    if (asym->parsed()) return cmd_asymptotics(config_path, m, out);
    if (experiment->parsed()) {
        ov.has_seed = seed_opt->count() > 0;
        return cmd_experiment(config_path, out, dry_run, full_scale, ov);
    }
    return kExitOk;
}
