// Operator CLI: thin shell over the C API. All pipeline logic lives behind
// seedstab.h; this file only parses flags, loads the config file and maps
// statuses to exit codes.
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "seedstab/seedstab.h"

namespace {

struct RunDeleter {
    void operator()(seedstab_run* run) const { seedstab_run_free(run); }
};
using RunHandle = std::unique_ptr<seedstab_run, RunDeleter>;

int fail(int code, const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seed-stability laboratory for a small sentiment classifier"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string seeds;
    std::string variant;
    std::string out_dir;
    int parallelism = 0;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--seeds", seeds, "seed list, e.g. 0..9 or 0,1,5");
    app.add_option("--variant", variant, "vanilla, swa or both")
        ->check(CLI::IsMember({"vanilla", "swa", "both"}));
    app.add_option("--parallelism", parallelism, "worker threads for training and eval")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "output directory (falls back to $SEEDSTAB_OUT)");

    app.add_subcommand("prepare", "materialize corpus, lexicons, vocab and the behavioral suite");
    app.add_subcommand("train", "train every (seed, variant) model");
    app.add_subcommand("eval", "score every model on the dev set and the suite");
    app.add_subcommand("report", "compose the cross-seed stability report");
    app.add_subcommand("all", "prepare, train, eval and report in sequence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(SEEDSTAB_ERR_CONFIG);
    }

    RunHandle run;
    if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) return fail(SEEDSTAB_ERR_CONFIG, "cannot open config file: " + config_path);
        std::ostringstream body;
        body << in.rdbuf();
        char err[1024] = {0};
        run.reset(seedstab_run_new_from_json(body.str().c_str(), err, sizeof err));
        if (!run) return fail(SEEDSTAB_ERR_CONFIG, config_path + ": " + err);
    } else {
        run.reset(seedstab_run_new());
        if (!run) return fail(SEEDSTAB_ERR_INTERNAL, "out of memory");
    }

    auto set = [&](const char* field, const std::string& value) {
        const seedstab_status st = seedstab_run_set(run.get(), field, value.c_str());
        if (st != SEEDSTAB_OK) {
            std::fprintf(stderr, "error: %s\n", seedstab_run_error(run.get()));
            return static_cast<int>(st);
        }
        return 0;
    };
    if (!seeds.empty())
        if (int code = set("seeds", seeds)) return code;
    if (!variant.empty())
        if (int code = set("variant", variant)) return code;
    if (parallelism > 0)
        if (int code = set("parallelism", std::to_string(parallelism))) return code;
    if (!out_dir.empty())
        if (int code = set("out_dir", out_dir)) return code;

    const std::string command = app.get_subcommands().front()->get_name();
    seedstab_status status = SEEDSTAB_ERR_INTERNAL;
    if (command == "prepare") status = seedstab_run_prepare(run.get());
    else if (command == "train") status = seedstab_run_train(run.get());
    else if (command == "eval") status = seedstab_run_eval(run.get());
    else if (command == "report") status = seedstab_run_report(run.get());
    else if (command == "all") status = seedstab_run_all(run.get());

    if (status != SEEDSTAB_OK)
        return fail(status, seedstab_run_error(run.get()));
    std::printf("%s: %s\n", command.c_str(), seedstab_run_last_summary(run.get()));
    return 0;
}
