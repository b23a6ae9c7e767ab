// symres: verify closed forms for the curve ideals over a parameter grid.
//
//   symres verify --q 1,2 --m 1,2 --n-max 8 --suites all --oracle
//   symres invariants --q 1 --m 2
//   symres regularity --q 3 --m 1,2 --format csv --out reg.csv
//
// Exit status: 0 if every check matched, 1 on a mismatch, 2 on a bad
// configuration. SYMRES_OUTPUT_DIR, when set, receives <subcommand>.<format>
// unless --out is given.

#include "render.hpp"
#include "suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace symres::cli;

struct Options {
    std::vector<int> q_list;
    std::vector<int> m_list;
    int n_max = 8;
    std::vector<std::string> suites;
    std::string format = "json";
    bool oracle = false;
    std::optional<int> rho_cap;
    std::string out;
};

void add_run_options(CLI::App* cmd, Options& opts, std::vector<std::string> default_suites)
{
    opts.suites = std::move(default_suites);
    cmd->add_option("--q", opts.q_list, "q values (comma separated)")->delimiter(',');
    cmd->add_option("--m", opts.m_list, "m values (comma separated)")->delimiter(',');
    cmd->add_option("--n-max", opts.n_max, "largest n examined")->capture_default_str();
    cmd->add_option("--suites", opts.suites, "suites to run, or 'all'")->delimiter(',')->capture_default_str();
    cmd->add_option("--format", opts.format, "json or csv")->capture_default_str();
    cmd->add_flag("--oracle", opts.oracle, "also compare against saturation (slow)");
    cmd->add_option("--rho-cap", opts.rho_cap, "largest r tried when scanning for rho_n (default n+1)");
    cmd->add_option("--out", opts.out, "output file (default: stdout or $SYMRES_OUTPUT_DIR)");
}

int execute(const std::string& name, const Options& opts)
{
    RunConfig config;
    config.q_list = opts.q_list;
    config.m_list = opts.m_list;
    config.n_max = opts.n_max;
    config.oracle = opts.oracle;
    config.rho_cap = opts.rho_cap;
    if (auto err = resolve_suites(opts.suites, config.suites)) {
        std::cerr << "error: " << err->message << '\n';
        return 2;
    }
    if (opts.format != "json" && opts.format != "csv") {
        std::cerr << "error: unknown format '" << opts.format << "'\n";
        return 2;
    }
    if (config.n_max < 2) {
        std::cerr << "error: --n-max must be at least 2\n";
        return 2;
    }
    if (config.rho_cap && *config.rho_cap < 1) {
        std::cerr << "error: --rho-cap must be positive\n";
        return 2;
    }

    std::filesystem::path target = opts.out;
    if (target.empty()) {
        if (const char* dir = std::getenv("SYMRES_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            target = std::filesystem::path(dir) / (name + "." + opts.format);
        }
    }
    auto emit = [&](const std::vector<Record>& records) -> bool {
        const std::string text = opts.format == "json" ? render_json(records) : render_csv(records);
        if (target.empty()) {
            std::cout << text;
            return true;
        }
        std::ofstream file(target);
        file << text;
        if (!file) {
            std::cerr << "error: cannot write " << target << '\n';
            return false;
        }
        return true;
    };

    std::ostringstream grid_notes;
    if (grid(config, grid_notes).empty()) {
        std::cerr << grid_notes.str();
        std::cerr << "error: the parameter grid is empty\n";
        emit({});
        return 2;
    }

    std::vector<Record> records;
    try {
        records = run(config, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (!emit(records)) {
        return 2;
    }

    std::size_t failed = 0;
    for (const auto& r : records) {
        if (!r.match) {
            ++failed;
            std::cerr << "mismatch: q=" << r.q << " m=" << r.m << (r.n ? " n=" + std::to_string(*r.n) : "") << ' '
                      << r.check_id << ": " << r.computed << " vs " << r.closed_form << '\n';
        }
    }
    if (name == "verify") {
        std::cerr << records.size() << " checks, " << failed << " mismatches\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symbolic powers of monomial curve ideals: invariants and checks"};
    app.require_subcommand(1);

    Options verify_opts;
    Options invariants_opts;
    Options regularity_opts;
    Options report_opts;
    add_run_options(app.add_subcommand("verify", "run suites and summarize"), verify_opts, {"all"});
    add_run_options(app.add_subcommand("invariants", "alpha, gamma, rho_n, resurgence and containments"),
                    invariants_opts, {"alpha-gamma", "rho", "hh", "chudnovsky", "bh"});
    add_run_options(app.add_subcommand("regularity", "regularity of symbolic powers and transfer checks"),
                    regularity_opts, {"regularity", "transfer"});
    add_run_options(app.add_subcommand("report", "write the full report"), report_opts, {"all"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const Options& opts = name == "verify"       ? verify_opts
                          : name == "invariants" ? invariants_opts
                          : name == "regularity" ? regularity_opts
                                                 : report_opts;
    return execute(name, opts);
}
