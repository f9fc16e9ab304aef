#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Brownian-sheet stochastic current simulation and verification harness"};
    app.require_subcommand(0, 1);

    std::string config_path, out_dir;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool list = false, print_defaults = false;
    auto* opt_config = app.add_option("--config", config_path, "INI config file");
    auto* opt_seed = app.add_option("--seed", seed, "master seed (overrides the config)");
    auto* opt_out = app.add_option("--out", out_dir, "output directory (overrides the config)");
    auto* opt_threads =
        app.add_option("--threads", threads, "worker thread count (overrides the config)");
    app.add_flag("--list", list, "list subcommands and the acceptance checks they exercise");
    app.add_flag("--print-defaults", print_defaults, "print the built-in config and exit");

    for (const std::string& name : sheetcli::subcommand_names())
        app.add_subcommand(name, "run the '" + name + "' experiment")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (list) {
        std::cout << sheetcli::list_mapping_text();
        return 0;
    }
    if (print_defaults) {
        std::cout << sheetcli::default_config_text();
        return 0;
    }
    const auto chosen = app.get_subcommands();
    if (chosen.empty()) {
        std::cerr << "error: no subcommand given (try --list or --help)" << std::endl;
        return 1;
    }

    try {
        const sheetcli::IniConfig ini = opt_config->count() > 0
                                            ? sheetcli::IniConfig::parse_file(config_path)
                                            : sheetcli::IniConfig::parse_text("");
        sheetcli::ExperimentConfig cfg = sheetcli::load_config(chosen.front()->get_name(), ini);
        if (opt_seed->count() > 0) cfg.seed = seed;
        if (opt_out->count() > 0) cfg.out_dir = out_dir;
        if (opt_threads->count() > 0) cfg.threads = threads;

        const auto t0 = std::chrono::steady_clock::now();
        sheetcli::ConvergenceReport rep = sheetcli::run_experiment(cfg);
        sheetcli::write_report(rep, cfg.out_dir);
        rep.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::cout << cfg.subcommand << ": " << rep.rows.size() << " rows -> " << cfg.out_dir
                  << "/report.{csv,json}" << (rep.batch_lines.empty() ? "" : " + batch.csv")
                  << " (seed " << cfg.seed << ", " << rep.wall_seconds << " s)"
                  << (rep.flagged ? " [FLAGGED]" : "") << std::endl;
        for (const std::string& note : rep.notes) std::cout << "  note: " << note << std::endl;
        return rep.flagged ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
