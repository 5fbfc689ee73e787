// Command-line front end: run | compare | convergence.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ldcu/cli.hpp"
#include "ldcu/errors.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-volume central-upwind solver for the 1-D/2-D Euler equations"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "./out";
    std::vector<std::string> overrides;
    std::string flavors_csv = "new,old";
    std::string resolutions_csv;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file")->required();
        cmd->add_option("--override", overrides, "repeatable key=value config override");
        cmd->add_option("--out", out_dir, "output directory (default ./out)");
    };

    CLI::App* cmd_run = app.add_subcommand("run", "run one scheme on one problem");
    add_common(cmd_run);

    CLI::App* cmd_compare = app.add_subcommand("compare", "run several flavors on one problem");
    add_common(cmd_compare);
    cmd_compare->add_option("--flavors", flavors_csv, "comma-separated flavors (default new,old)");

    CLI::App* cmd_conv = app.add_subcommand("convergence", "L1-error refinement study");
    add_common(cmd_conv);
    cmd_conv->add_option("--resolutions", resolutions_csv, "comma-separated cell counts")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // flag misuse is a config error
    }

    try {
        const ldcu::RunConfig cfg = ldcu::load_config_file(config_path, overrides);
        if (cmd_run->parsed()) return ldcu::cmd_run(cfg, out_dir);
        if (cmd_compare->parsed()) {
            std::vector<ldcu::SchemeFlavor> flavors;
            for (const std::string& name : split_list(flavors_csv))
                flavors.push_back(ldcu::flavor_from_string(name));
            return ldcu::cmd_compare(cfg, flavors, out_dir);
        }
        std::vector<int> resolutions;
        for (const std::string& tok : split_list(resolutions_csv)) {
            const int n = std::stoi(tok);
            if (n <= 0) throw ldcu::ConfigError("resolutions must be positive");
            resolutions.push_back(n);
        }
        return ldcu::cmd_convergence(cfg, resolutions, out_dir);
    } catch (const ldcu::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ldcu::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
