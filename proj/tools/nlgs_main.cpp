#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nlgs/experiment.hpp"

// Exit codes: 0 success, 1 internal error, 2 invalid configuration,
// 3 divergence (last checkpoint retained on disk).
int main(int argc, char** argv) {
    CLI::App app{"nlgs - nonlocal Gray-Scott solver"};
    app.footer("Log verbosity is controlled by the NLGS_LOG environment variable\n"
               "(quiet | info | debug).");

    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    bool desk = false;
    bool seed = false;
    bool list_presets = false;
    bool print_config = false;

    app.add_option("--config", config_path, "Path to a JSON run configuration");
    app.add_option("--preset", preset_name, "Named experiment preset");
    app.add_flag("--desk", desk, "Use the reduced-scale variant of the preset");
    app.add_option("--out", out_dir, "Output directory (overrides the config)");
    app.add_flag("--seed-check", seed, "Run the built-in invariant suite and exit");
    app.add_flag("--list-presets", list_presets, "List preset names and exit");
    app.add_flag("--print-config", print_config,
                 "Print the resolved configuration instead of running it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (seed) {
            const int failures = nlgs::seed_check(std::cout);
            return failures == 0 ? 0 : 1;
        }
        if (list_presets) {
            for (const auto& name : nlgs::preset_names()) std::cout << name << "\n";
            return 0;
        }

        if (config_path.empty() == preset_name.empty()) {
            std::cerr << "error: provide exactly one of --config or --preset "
                         "(see --help)\n";
            return 2;
        }

        nlgs::RunConfig config = config_path.empty()
                                     ? nlgs::preset(preset_name, desk)
                                     : nlgs::load_config_file(config_path);
        if (!out_dir.empty()) config.output.dir = out_dir;
        config.validate();

        if (print_config) {
            std::cout << config.to_json();
            return 0;
        }
        nlgs::run_experiment(config);
        return 0;
    } catch (const nlgs::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlgs::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
