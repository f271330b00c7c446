// qarray — command-line front end
#include <qarray/cli.hpp>

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"qarray: squeezed-frame coupled-cavity array simulator"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir = ".";
    std::vector<std::string> overrides;
    bool force = false;

    for (const char* name : {"boundstate", "coupling", "evolve", "validate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "key=value configuration file");
        sub->add_option("--preset", preset,
                        "fig2 | fig3a | fig3b | fig3c | fig4-weak | fig4-strong");
        sub->add_option("--out", out_dir, "output directory (default .)");
        sub->add_option("--set", overrides, "override key=value (repeatable)");
        if (std::string(name) == "validate")
            sub->add_flag("--force", force, "run even if the regime check fails");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? qarray::cli::kExitOk : qarray::cli::kExitUsage;
    }

    try {
        qarray::cli::RunConfig cfg;
        if (!preset.empty()) cfg.apply_preset(preset);
        if (!config_path.empty()) cfg.apply_file(config_path);
        for (const auto& kv : overrides) cfg.set_assignment(kv);
        const std::string command = app.get_subcommands().front()->get_name();
        return qarray::cli::run_command(command, cfg, out_dir, force);
    } catch (const std::exception& e) {
        std::cerr << "qarray: " << e.what() << "\n";
        return qarray::cli::kExitParameter;
    }
}
