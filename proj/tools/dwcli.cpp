#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dw/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Twisted quantum double anyons, boundaries and walls"};
    std::string config, mode, out, format, suite;
    bool oracle = false;
    app.add_option("--config", config, "JSON model configuration");
    app.add_option("--mode", mode, "anyons | boundary-anyons | fusion-table | lagrangian | tunneling | gsd");
    app.add_option("--out", out, "write the artifact here instead of stdout");
    app.add_option("--format", format, "csv | markdown | json");
    app.add_option("--verify", suite, "check bundled tables: appendixA | s3 | walls | all");
    app.add_flag("--oracle", oracle, "cross-check multiplicities against the projector-trace oracle");
    CLI11_PARSE(app, argc, argv);

    if (!suite.empty()) {
        try {
            std::ostringstream report;
            int fails = dw::verify_golden_report(suite, report);
            std::cout << report.str();
            return fails ? 1 : 0;
        } catch (const dw::ConfigError& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        }
    }
    if (config.empty()) {
        std::cerr << "config error: --config or --verify is required\n";
        return 2;
    }

    dw::ModelConfig cfg;
    try {
        std::ifstream in(config);
        if (!in) throw dw::ConfigError("cannot read " + config);
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = dw::parse_config(ss.str());
        if (!mode.empty()) cfg.mode = mode;
        if (!format.empty()) cfg.format = format;
    } catch (const dw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    std::ostringstream buf;
    int rc = dw::run(cfg, buf, std::cerr, oracle);
    if (rc != 0) return rc;
    if (out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 2;
        }
        f << buf.str();
    }
    return 0;
}
