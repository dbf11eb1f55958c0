#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/fsio.hpp"
#include "common/hash.hpp"
#include "pipeline/pipeline.hpp"
#include "pipeline/run_config.hpp"

using namespace seedstab;
using namespace seedstab::pipeline;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "seedstab_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// Small but complete run: big enough to mine 10+ polarized names per sign.
RunConfig mini_config(const fs::path& out) {
    RunConfig config;
    config.seeds = {0, 1};
    config.out_dir = out.string();
    config.data.synthetic = {2024, 600, 150, 300};
    config.suite.scale = 0.05;
    return config;
}

std::map<std::string, std::string> tree_hashes(const fs::path& root) {
    std::map<std::string, std::string> hashes;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file())
            hashes[fs::relative(entry.path(), root).string()] =
                hex64(fnv1a64(read_file(entry.path())));
    return hashes;
}

}  // namespace

TEST_CASE("config json parsing applies fields and rejects strays") {
    auto config = parse_run_config_json(R"({
        "seeds": [3, 1],
        "variants": ["swa"],
        "parallelism": 2,
        "out_dir": "/tmp/x",
        "data": {"synthetic": {"n_train": 500}, "min_freq": 2},
        "train": {"epochs": 3, "peak_lr": 0.005},
        "swa": {"cutoff_epoch": 1, "select_lr": false},
        "suite": {"scale": 0.5},
        "stability": {"dir_categories": 2}
    })");
    CHECK(config.seeds == std::vector<int>{3, 1});
    CHECK(config.variants == std::vector<std::string>{"swa"});
    CHECK(config.parallelism == 2);
    CHECK(config.data.synthetic.n_train == 500);
    CHECK(config.data.synthetic.n_dev == 400);  // untouched default
    CHECK(config.data.min_freq == 2);
    CHECK(config.train.epochs == 3);
    CHECK(config.train.peak_lr == doctest::Approx(0.005));
    CHECK(config.train.batch_size == 32);
    CHECK(config.swa.cutoff_epoch == 1);
    CHECK(!config.swa.select_lr);
    CHECK(config.suite.scale == doctest::Approx(0.5));
    CHECK(config.stability.dir_categories == 2);

    CHECK(parse_run_config_json(R"({"seeds": "2..4"})").seeds ==
          std::vector<int>{2, 3, 4});

    SUBCASE("field errors name the path") {
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_run_config_json(R"({"bogus": 1})")),
                             doctest::Contains("config: bogus: unknown field"), ConfigError);
        CHECK_THROWS_WITH_AS(
            static_cast<void>(parse_run_config_json(R"({"train": {"bogus": 1}})")),
            doctest::Contains("train.bogus"), ConfigError);
        CHECK_THROWS_WITH_AS(
            static_cast<void>(parse_run_config_json(R"({"train": {"epochs": "five"}})")),
            doctest::Contains("train.epochs: expected an integer"), ConfigError);
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_run_config_json("not json")),
                             doctest::Contains("not valid JSON"), ConfigError);
        CHECK_THROWS_AS(static_cast<void>(parse_run_config_json("[1, 2]")), ConfigError);
    }
}

TEST_CASE("config validation names the offending field") {
    RunConfig config;
    config.out_dir = "/tmp/x";
    CHECK_NOTHROW(config.validate());

    auto expect = [&](RunConfig bad, const char* needle) {
        CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains(needle), ConfigError);
    };
    {
        auto bad = config;
        bad.seeds = {1, 1};
        expect(bad, "duplicate seed 1");
    }
    {
        auto bad = config;
        bad.seeds = {-2};
        expect(bad, "seeds");
    }
    {
        auto bad = config;
        bad.variants = {"swag"};
        expect(bad, "variants");
    }
    {
        auto bad = config;
        bad.parallelism = 0;
        expect(bad, "parallelism");
    }
    {
        auto bad = config;
        bad.train.warmup_frac = 1.0;
        expect(bad, "train.warmup_frac");
    }
    {
        auto bad = config;
        bad.data.source = "sst2";
        expect(bad, "data.sst2.train_tsv");
    }
    {
        auto bad = config;
        bad.stability.dir_categories = 4;
        expect(bad, "stability.dir_categories");
    }
    {
        auto bad = config;
        bad.swa.select_lr = true;
        bad.swa.candidate_lrs = {};
        expect(bad, "swa.candidate_lrs");
    }
}

TEST_CASE("seed list grammar") {
    CHECK(parse_seed_list("0,1,5") == std::vector<int>{0, 1, 5});
    CHECK(parse_seed_list("0..9") ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(parse_seed_list(" 3, 1 , 2 ") == std::vector<int>{1, 2, 3});
    CHECK(parse_seed_list("0..2,7") == std::vector<int>{0, 1, 2, 7});
    CHECK(parse_seed_list("4") == std::vector<int>{4});

    auto throws = [](const char* spec, const char* needle) {
        CHECK_THROWS_WITH_AS(static_cast<void>(parse_seed_list(spec)),
                             doctest::Contains(needle), ConfigError);
    };
    throws("2..1", "runs backwards");
    throws("x", "not an integer");
    throws("-1", "negative");
    throws("0..20000", "too large");
    throws("1,1", "duplicate seed 1");
    throws("", "empty entry");
    throws("1,,2", "empty entry");
}

TEST_CASE("cli overrides beat the config, env is the last resort") {
    RunConfig config;
    config.out_dir = "";

    CliOverrides overrides;
    overrides.seeds = "1,2";
    overrides.variant = "both";
    overrides.parallelism = 4;
    overrides.out_dir = "/tmp/flag";
    auto resolved = apply_overrides(config, overrides);
    CHECK(resolved.seeds == std::vector<int>{1, 2});
    CHECK(resolved.variants == std::vector<std::string>{"vanilla", "swa"});
    CHECK(resolved.parallelism == 4);
    CHECK(resolved.out_dir == "/tmp/flag");

    overrides.variant = "swa";
    CHECK(apply_overrides(config, overrides).variants == std::vector<std::string>{"swa"});
    overrides.variant = "neither";
    CHECK_THROWS_AS(static_cast<void>(apply_overrides(config, overrides)), ConfigError);

    SUBCASE("SEEDSTAB_OUT fills only an unset out_dir") {
        setenv("SEEDSTAB_OUT", "/tmp/env", 1);
        CHECK(apply_overrides(config, {}).out_dir == "/tmp/env");
        auto explicit_cfg = config;
        explicit_cfg.out_dir = "/tmp/cfg";
        CHECK(apply_overrides(explicit_cfg, {}).out_dir == "/tmp/cfg");
        unsetenv("SEEDSTAB_OUT");
        CHECK(apply_overrides(config, {}).out_dir.empty());
    }
}

TEST_CASE("canonical json is stable, the prepare fingerprint tracks only data-shaping fields") {
    RunConfig a;
    a.out_dir = "/tmp/a";
    RunConfig b = a;
    CHECK(a.canonical_json() == b.canonical_json());

    b.seeds = {0, 1, 2};
    b.parallelism = 8;
    b.out_dir = "/tmp/b";
    CHECK(a.canonical_json() != b.canonical_json());
    CHECK(a.prepare_fingerprint() == b.prepare_fingerprint());  // same artifacts

    auto c = a;
    c.suite.scale = 0.5;
    CHECK(a.prepare_fingerprint() != c.prepare_fingerprint());
    auto d = a;
    d.data.synthetic.n_train = 999;
    CHECK(a.prepare_fingerprint() != d.prepare_fingerprint());
    auto e = a;
    e.train.peak_lr = 0.123;  // training knob, prepared artifacts unaffected
    CHECK(a.prepare_fingerprint() == e.prepare_fingerprint());
}

TEST_CASE("run config maps onto the trainer's step arithmetic") {
    RunConfig config;
    auto cfg = config.train_config(3, 2000);
    CHECK(cfg.seed == 3);
    CHECK(cfg.epochs == 5);
    CHECK(textmodel::steps_per_epoch(2000, 32) == 63);  // ceil(2000 / 32)
    CHECK(cfg.total_steps == 315);
    CHECK(cfg.warmup_steps == 19);  // round(0.06 * 315)
    CHECK(cfg.embedding_dim == 16);
    CHECK(cfg.hidden_dim == 32);

    auto swa_cfg = config.swa_config();
    CHECK(swa_cfg.cutoff_epoch == 2);
    CHECK(swa_cfg.constant_lr == doctest::Approx(6e-3));
}

TEST_CASE("pipeline stages run end to end and are reproducible") {
    auto out = scratch_dir("pipeline_e2e");
    auto config = mini_config(out);
    Layout lay(config.out_dir);

    auto prepare = cmd_prepare(config);
    CHECK(prepare.n_train == 600);
    CHECK(prepare.n_dev == 150);
    CHECK(prepare.n_test == 300);
    CHECK(prepare.vocab_size > 100);
    CHECK(prepare.positive_names >= 10);
    CHECK(prepare.negative_names >= 10);
    CHECK(prepare.capabilities == 18);
    CHECK(prepare.suite_instances > 100);
    CHECK(fs::exists(lay.train_jsonl()));
    CHECK(fs::exists(lay.vocab_txt()));
    CHECK(fs::exists(lay.suite_manifest_json()));

    auto before = tree_hashes(lay.prepared());
    cmd_prepare(config);
    CHECK(tree_hashes(lay.prepared()) == before);  // idempotent

    auto train = cmd_train(config);
    REQUIRE(train.runs.size() == 4);
    CHECK(train.n_failed == 0);
    for (const auto& run : train.runs) {
        CAPTURE(run.seed);
        CAPTURE(run.variant);
        CHECK(run.ok);
        CHECK(run.final_dev_accuracy > 0.6);
        for (int epoch = 1; epoch <= 5; ++epoch)
            CHECK(fs::exists(lay.weights_file(run.seed, run.variant,
                                              std::to_string(epoch))));
        CHECK(fs::exists(lay.weights_file(run.seed, run.variant, "final")));
        auto log = json::parse(read_file(lay.train_log_json(run.seed, run.variant)));
        CHECK(log["seed"] == run.seed);
        CHECK(log["variant"] == run.variant);
        CHECK(log["epochs"] == 5);
        if (run.variant == "swa") {
            REQUIRE(log.contains("swa"));
            CHECK(log["swa"]["n_averaged"] == 3);  // epochs 3..5 at cutoff 2
            CHECK(log["swa"].contains("chosen_constant_lr"));
            CHECK(log["swa"]["candidate_dev_accuracy"].size() == 2);
        } else {
            CHECK(!log.contains("swa"));
        }
    }
    CHECK(!fs::exists(lay.failures_json()));

    auto eval = cmd_eval(config);
    CHECK(eval.n_models == 4);
    CHECK(eval.records_per_model == 150 + prepare.suite_instances);
    std::map<std::string, std::string> eval_bytes;
    for (const auto& [seed, variant] :
         std::vector<std::pair<int, std::string>>{{0, "vanilla"}, {0, "swa"},
                                                  {1, "vanilla"}, {1, "swa"}}) {
        REQUIRE(fs::exists(lay.eval_jsonl(seed, variant)));
        eval_bytes[lay.eval_jsonl(seed, variant).string()] =
            read_file(lay.eval_jsonl(seed, variant));
    }
    cmd_eval(config);  // re-evaluating identical models is byte-stable
    for (const auto& [path, bytes] : eval_bytes) CHECK(read_file(path) == bytes);

    auto report = cmd_report(config);
    CHECK(fs::exists(lay.report_full() / "report.json"));
    CHECK(fs::exists(lay.report_full() / "error_rates.csv"));
    CHECK(fs::exists(lay.report_full() / "overlap_pairs.csv"));
    CHECK(fs::exists(lay.report_full() / "kappa.csv"));
    CHECK(fs::exists(lay.report_full() / "summary.txt"));
    CHECK(report.wrote_filtered == fs::exists(lay.report_filtered()));
    REQUIRE(!report.notices.empty());

    auto body = json::parse(read_file(lay.report_full() / "report.json"));
    CHECK(body["seeds"].size() == 2);
    CHECK(body["variants"].size() == 2);
    REQUIRE(body.contains("dev"));
    CHECK(body["dev"]["kappa"].contains("vanilla"));
    CHECK(body["dev"]["kappa"].contains("swa"));
    CHECK(body["dev"]["kappa"].contains("difference"));
    CHECK(body["capabilities"].size() == 18);
    for (const auto& cap : body["capabilities"]) {
        CHECK(cap["kappa"].contains("vanilla"));
        CHECK(cap["kappa"].contains("swa"));
        CHECK(cap["kappa"].contains("difference"));
        CHECK(cap["overlap"]["vanilla"]["pairs"].size() == 1);  // 2 seeds, 1 pair
    }

    SUBCASE("report fails loudly when an eval file is missing") {
        fs::remove(lay.eval_jsonl(1, "swa"));
        CHECK_THROWS_WITH_AS(static_cast<void>(cmd_report(config)),
                             doctest::Contains("(seed 1, swa)"), EvalError);
        cmd_eval(config);  // restore
        CHECK_NOTHROW(static_cast<void>(cmd_report(config)));
    }

    SUBCASE("data-shaping config drift invalidates the prepared artifacts") {
        auto drifted = config;
        drifted.suite.scale = 0.1;
        CHECK_THROWS_WITH_AS(static_cast<void>(cmd_train(drifted)),
                             doctest::Contains("run prepare again"), ConfigError);
        CHECK_THROWS_AS(static_cast<void>(cmd_eval(drifted)), ConfigError);
        CHECK_THROWS_AS(static_cast<void>(cmd_report(drifted)), ConfigError);
    }

    SUBCASE("training requires prepared data") {
        auto fresh = mini_config(scratch_dir("pipeline_unprepared"));
        CHECK_THROWS_WITH_AS(static_cast<void>(cmd_train(fresh)),
                             doctest::Contains("run prepare first"), DataError);
    }

    SUBCASE("evaluation requires trained models") {
        auto fresh = mini_config(scratch_dir("pipeline_untrained"));
        cmd_prepare(fresh);
        CHECK_THROWS_WITH_AS(static_cast<void>(cmd_eval(fresh)),
                             doctest::Contains("run train first"), EvalError);
    }
}

TEST_CASE("a sweep where every run diverges raises a training error") {
    auto out = scratch_dir("pipeline_allfail");
    auto config = mini_config(out);
    config.train.peak_lr = 1e200;  // big enough to overflow layer-1 products
    cmd_prepare(config);
    try {
        cmd_train(config);
        FAIL("expected a training error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::training);
        CHECK(std::string(e.what()).find("all 4 training runs failed") != std::string::npos);
    }
    CHECK(!fs::exists(out / "models" / "failures.json"));
}

TEST_CASE("report refuses to run on a single seed") {
    auto out = scratch_dir("pipeline_oneseed");
    auto config = mini_config(out);
    config.seeds = {0};
    CHECK_THROWS_WITH_AS(static_cast<void>(cmd_report(config)),
                         doctest::Contains("at least 2 seeds"), ConfigError);
}

TEST_CASE("unset output directory is rejected with guidance") {
    CHECK_THROWS_WITH_AS(Layout(""), doctest::Contains("SEEDSTAB_OUT"), ConfigError);
}
