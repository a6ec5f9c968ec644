// cascade-lab: sweeps, figure recipes, and Fock-convergence checks for
// correlated-photon-source entanglement models.
//
// Exit codes: 0 success (possibly with per-point warnings), 2 configuration
// error, 3 I/O error.

#include <CLI11.hpp>

#include <cascade/sweep.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw cascade::ConfigError(path + ": invalid JSON: " + e.what());
    }
    return j;
}

int write_outputs(const cascade::SweepResult& res, const std::string& out_dir,
                  const std::string& format, const std::string& stem) {
    namespace fs = std::filesystem;
    try {
        fs::create_directories(out_dir);
        fs::path base = fs::path(out_dir) / stem;
        if (format == "csv" || format == "both") {
            std::ofstream os(base.string() + ".csv", std::ios::binary);
            if (!os) throw std::ios_base::failure("cannot write " + base.string() + ".csv");
            cascade::write_csv(res, os);
            if (!os) throw std::ios_base::failure("write failed: " + base.string() + ".csv");
        }
        if (format == "json" || format == "both") {
            std::ofstream os(base.string() + ".json", std::ios::binary);
            if (!os) throw std::ios_base::failure("cannot write " + base.string() + ".json");
            os << cascade::result_to_json(res).dump(2) << "\n";
            if (!os) throw std::ios_base::failure("write failed: " + base.string() + ".json");
        }
    } catch (const std::exception& e) {
        std::cerr << "cascade-lab: I/O error: " << e.what() << "\n";
        return kExitIo;
    }
    std::size_t failures = 0;
    for (const auto& row : res.rows)
        if (!row.error.empty()) ++failures;
    if (failures > 0)
        std::cerr << "cascade-lab: warning: " << failures << "/" << res.rows.size()
                  << " grid points failed (see error column)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cascade-lab: distributable-entanglement sweeps for photon sources"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", format = "csv", recipe_name;
    int workers = 0;

    CLI::App* run = app.add_subcommand("run", "Run a sweep from a JSON config");
    run->add_option("config", config_path, "Path to config JSON")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    run->add_option("--workers", workers, "Worker threads (default: CASCADE_LAB_WORKERS)");

    CLI::App* rec = app.add_subcommand("recipe", "Run a named figure recipe");
    rec->add_option("name", recipe_name, "Recipe name")->required();
    rec->add_option("--out", out_dir, "Output directory");
    rec->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    rec->add_option("--workers", workers, "Worker threads");
    rec->add_flag_callback("--list", [] {
        for (const auto& n : cascade::recipe_names()) std::cout << n << "\n";
        std::exit(0);
    });

    CLI::App* conv = app.add_subcommand("converge", "Fock-truncation convergence ladder");
    conv->add_option("config", config_path, "Path to config JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            cascade::SweepConfig cfg = cascade::SweepConfig::from_json(load_json(config_path));
            cascade::SweepResult res = cascade::run_sweep(cfg, workers);
            std::string stem = std::filesystem::path(config_path).stem().string();
            return write_outputs(res, out_dir, format, stem);
        }
        if (rec->parsed()) {
            cascade::SweepConfig cfg = cascade::recipe(recipe_name);
            cascade::SweepResult res = cascade::run_sweep(cfg, workers);
            return write_outputs(res, out_dir, format, recipe_name);
        }
        if (conv->parsed()) {
            cascade::SweepConfig cfg = cascade::SweepConfig::from_json(load_json(config_path));
            std::map<std::string, double> params = cfg.fixed;
            // converge at the first grid point of each axis
            for (const auto& a : cfg.axes) params[a.name] = a.values().front();
            cascade::FockRecord fr = cascade::fock_convergence(cfg.model, params);
            for (const auto& [n, cd] : fr.ladder)
                std::cout << "n_fock=" << n << " Cd=" << cascade::format_sig(cd) << "\n";
            std::cout << (fr.converged ? "converged at n_fock=" : "not converged, last n_fock=")
                      << fr.n_fock << "\n";
            return fr.converged ? 0 : kExitConfig;
        }
    } catch (const cascade::ConfigError& e) {
        std::cerr << "cascade-lab: config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "cascade-lab: I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "cascade-lab: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
