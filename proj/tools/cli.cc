// Copyright 2026 The aphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aphase/batch.h"
#include "aphase/calibration.h"
#include "aphase/errors.h"
#include "aphase/fisher.h"
#include "aphase/fock.h"
#include "aphase/io.h"
#include "aphase/plan.h"
#include "aphase/rng.h"
#include "aphase/sequence_search.h"

namespace aphase::cli {

using nlohmann::json;

namespace {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Destination for a command's output files. Without --out everything goes
/// to stdout, one section after another.
class Sink {
   public:
    Sink(std::string dir, std::ostream &out) : dir_(std::move(dir)), out_(out) {
        if (!dir_.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir_, ec);
            if (ec || !std::filesystem::is_directory(dir_)) {
                throw IoError("cannot create output directory '" + dir_ + "'");
            }
        }
    }

    void write(const std::string &name, const std::string &content) {
        if (dir_.empty()) {
            out_ << content;
            if (!content.empty() && content.back() != '\n') {
                out_ << '\n';
            }
            return;
        }
        auto path = std::filesystem::path(dir_) / name;
        std::ofstream f(path, std::ios::binary);
        f << content;
        if (!f) {
            throw IoError("cannot write '" + path.string() + "'");
        }
    }

    bool to_files() const {
        return !dir_.empty();
    }

   private:
    std::string dir_;
    std::ostream &out_;
};

json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot read '" + path + "'");
    }
    try {
        return json::parse(f);
    } catch (const json::parse_error &e) {
        throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

TwoModeFockState input_state_for(const StateClass &c) {
    if (c.kind == StateClass::Kind::Noon) {
        return TwoModeFockState::noon(c.photons);
    }
    switch (c.photons) {
        case 1:
            return TwoModeFockState::number_state(1, 0);
        case 2:
            return TwoModeFockState::number_state(1, 1);
        default:
            return TwoModeFockState::number_state(2, 2);
    }
}

int cmd_derive(const std::string &cls, const RunConfig &cfg, std::ostream &out, std::ostream &) {
    StateClass c = StateClass::parse(cls);
    if (c.photons > kDefaultPhotonCap) {
        throw ConfigError("class " + cls + " exceeds the photon cap of " + std::to_string(kDefaultPhotonCap));
    }
    TwoModeFockState state = input_state_for(c);
    HarmonicLikelihood L = c.kind == StateClass::Kind::Noon ? derive_harmonic_matrix_from_arms(state)
                                                            : derive_harmonic_matrix(state);
    json doc = {
        {"command", "derive"}, {"config", cfg.to_json()}, {"class", cls}, {"likelihood", likelihood_to_json(L)}};

    std::ostringstream csv;
    csv << "delta";
    for (const auto &label : L.labels()) {
        csv << ',' << label;
    }
    csv << '\n';
    for (int k = 0; k < 256; k++) {
        double delta = kTwoPi * k / 256;
        csv << format_number(delta);
        for (size_t x = 0; x < L.num_outcomes(); x++) {
            csv << ',' << format_number(L.probability(x, delta));
        }
        csv << '\n';
    }
    Sink sink(cfg.out, out);
    sink.write("matrix.json", dump(doc));
    sink.write("fringe.csv", csv.str());
    return kSuccess;
}

HarmonicLikelihood fisher_fixture(const std::string &name) {
    if (name == "a-ideal") {
        return ideal_single_photon();
    }
    if (name == "b-ideal") {
        return ideal_biphoton();
    }
    if (name == "gamma-ideal") {
        return ideal_four_photon();
    }
    if (name == "a-exp") {
        return experimental_fixture(ExperimentalFixture::SinglePhoton);
    }
    if (name == "b-exp") {
        return experimental_fixture(ExperimentalFixture::Biphoton);
    }
    if (name == "gamma-exp") {
        return experimental_fixture(ExperimentalFixture::FourPhoton);
    }
    if (name.rfind("noon-", 0) == 0) {
        auto at = name.find('@');
        StateClass c = StateClass::parse(name.substr(0, at));
        double v = 1.0;
        if (at != std::string::npos) {
            try {
                v = std::stod(name.substr(at + 1));
            } catch (const std::exception &) {
                throw ConfigError("bad visibility in fixture '" + name + "'");
            }
        }
        return noon_likelihood(c.photons, v);
    }
    throw ConfigError(
        "unknown fixture '" + name + "'; expected a-ideal, b-ideal, gamma-ideal, a-exp, b-exp, gamma-exp or noon-k[@v]");
}

int cmd_fisher(const std::string &fixture, const RunConfig &cfg, std::ostream &out, std::ostream &) {
    if (cfg.copies < 1 || cfg.copies > 4) {
        throw ConfigError("--copies must lie in [1, 4]");
    }
    HarmonicLikelihood single = fisher_fixture(fixture);
    HarmonicLikelihood L = single;
    for (int k = 1; k < cfg.copies; k++) {
        L = independent_product(L, single);
    }
    FisherSummary s = fisher_summary(L, cfg.grid);
    json doc = {
        {"command", "fisher"},
        {"config", cfg.to_json()},
        {"fixture", fixture},
        {"copies", cfg.copies},
        {"grid", cfg.grid},
        {"max", s.max_fisher},
        {"argmax", s.argmax_delta},
        {"fisher_length", s.fisher_length},
    };
    std::ostringstream csv;
    write_fisher_csv(csv, s.curve);
    Sink sink(cfg.out, out);
    sink.write("fisher_summary.json", dump(doc));
    sink.write("fisher.csv", csv.str());
    return kSuccess;
}

BatchConfig batch_config(const RunConfig &cfg, uint64_t master_seed) {
    BatchConfig b;
    b.trials = cfg.trials;
    b.master_seed = master_seed;
    b.bootstrap.samples = cfg.bootstrap_samples;
    b.workers = cfg.workers;
    b.trial.policy = parse_policy_kind(cfg.policy);
    b.trial.policy_config.grid_points = cfg.policy_grid;
    if (cfg.phi != "random") {
        b.phi_mode = PhiMode::Fixed;
        try {
            b.fixed_phi = std::stod(cfg.phi);
        } catch (const std::exception &) {
            throw ConfigError("--phi must be 'random' or a number, got '" + cfg.phi + "'");
        }
    }
    if (cfg.state_loss) {
        b.trial.state_loss = laboratory_retention_table();
    }
    return b;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<std::pair<SequencePlan, FixtureSet>> runs;
    if (!cfg.plan.empty()) {
        PlanFile pf = plan_from_json(read_json_file(cfg.plan));
        runs.emplace_back(pf.plan, pf.fixtures);
    } else {
        for (int N : cfg.N) {
            runs.emplace_back(demonstrated_plan(N), parse_fixture_set(cfg.fixtures));
        }
    }

    ReferenceConfig ref;
    ref.trials = cfg.trials;
    ref.bootstrap_samples = cfg.bootstrap_samples;
    ref.workers = cfg.workers;
    ref.heisenberg = parse_heisenberg_convention(cfg.heisenberg);

    Sink sink(cfg.out, out);
    std::vector<CurveRow> curve;
    json results = json::array();
    for (const auto &[plan, fixtures] : runs) {
        int N = plan.total_resources();
        if (N > cfg.resource_cap) {
            throw ConfigError("plan uses N=" + std::to_string(N) + ", above the cap of " + std::to_string(cfg.resource_cap));
        }
        err << "simulate: N=" << N << " plan " << plan.describe() << "\n";
        uint64_t base = static_cast<uint64_t>(N) * 16;
        LikelihoodSet set(fixtures);
        BatchResult main = run_batch(plan, set, batch_config(cfg, derive_seed(cfg.seed, base)));

        ref.master_seed = derive_seed(cfg.seed, base + 1);
        TrialStatistics sql_vis = simulate_sql(N, cfg.visibility, ref);
        ref.master_seed = derive_seed(cfg.seed, base + 2);
        TrialStatistics sql_ideal = simulate_sql(N, 1.0, ref);
        double heis = heisenberg_deviation(N, ref.heisenberg);

        char vis_name[64];
        std::snprintf(vis_name, sizeof(vis_name), "sql-v%.3f", cfg.visibility);
        curve.push_back(curve_row(cfg.policy, main.stats));
        curve.push_back(curve_row(vis_name, sql_vis));
        curve.push_back(curve_row("sql-ideal", sql_ideal));
        double hs = heis * std::sqrt(static_cast<double>(N));
        curve.push_back({N, "heisenberg-" + cfg.heisenberg, heis, hs, heis, heis, heis * heis});

        json entry = {
            {"N", N},
            {"plan", plan_to_json(plan, fixtures)},
            {"plan_description", plan.describe()},
            {"scheme", cfg.policy},
            {"statistics", statistics_to_json(main.stats)},
            {"sql_visibility", statistics_to_json(sql_vis)},
            {"sql_ideal", statistics_to_json(sql_ideal)},
            {"heisenberg_deviation", heis},
        };
        if (main.stats.holevo_variance > 0) {
            entry["db_vs_sql_ideal"] = {
                {"variance", db_improvement(sql_ideal.holevo_variance, main.stats.holevo_variance)},
                {"deviation", db_improvement(sql_ideal.holevo_deviation, main.stats.holevo_deviation)},
            };
            entry["db_vs_sql_visibility"] = {
                {"variance", db_improvement(sql_vis.holevo_variance, main.stats.holevo_variance)},
                {"deviation", db_improvement(sql_vis.holevo_deviation, main.stats.holevo_deviation)},
            };
        }
        results.push_back(entry);

        if (sink.to_files()) {
            std::ostringstream trials;
            write_trials_csv(trials, main.trials);
            sink.write("trials_N" + std::to_string(N) + ".csv", trials.str());
        }
    }
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    sink.write("results.json", dump({{"command", "simulate"}, {"config", cfg.to_json()}, {"results", results}}));
    sink.write("curve.csv", csv.str());
    return kSuccess;
}

int cmd_optimize(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    LikelihoodSet set(parse_fixture_set(cfg.fixtures));
    SearchConfig search;
    search.trials_per_plan = cfg.trials_per_plan;
    search.bootstrap_samples = cfg.bootstrap_samples;
    search.workers = cfg.workers;
    search.resource_cap = cfg.resource_cap;
    search.policy.grid_points = cfg.policy_grid;

    Sink sink(cfg.out, out);
    json all = json::array();
    std::ostringstream csv;
    csv << "N,rank,plan,holevo_variance,holevo_deviation,ci_lo,ci_hi,tied_with_best\n";
    for (int N : cfg.N) {
        search.master_seed = derive_seed(cfg.seed, static_cast<uint64_t>(N));
        err << "optimize: N=" << N << ", " << enumerate_plans(N, search.classes).size() << " plans\n";
        auto ranked = optimize_sequence(N, set, search);
        json plans = json::array();
        for (const auto &r : ranked) {
            plans.push_back({
                {"rank", r.rank},
                {"plan", plan_to_json(r.plan, set.fixtures())},
                {"plan_description", r.plan.describe()},
                {"tied_with_best", r.tied_with_best},
                {"statistics", statistics_to_json(r.stats)},
            });
            csv << N << ',' << r.rank << ",\"" << r.plan.describe() << "\"," << format_number(r.stats.holevo_variance)
                << ',' << format_number(r.stats.holevo_deviation) << ',' << format_number(r.stats.bootstrap_ci.lo) << ','
                << format_number(r.stats.bootstrap_ci.hi) << ',' << (r.tied_with_best ? "true" : "false") << '\n';
        }
        all.push_back({{"N", N}, {"ranking", plans}});
    }
    sink.write("optimize.json", dump({{"command", "optimize"}, {"config", cfg.to_json()}, {"results", all}}));
    sink.write("optimize.csv", csv.str());
    return kSuccess;
}

int cmd_calibrate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.J.empty()) {
        throw ConfigError("calibrate needs --J <matrix.json>");
    }
    CalibrationMatrix J = calibration_from_json(read_json_file(cfg.J));
    RetentionVector r = compute_retention(J);
    json doc = {
        {"command", "calibrate"},
        {"config", cfg.to_json()},
        {"labels", J.labels},
        {"retention", r.retention},
        {"loss", r.loss()},
    };
    // The retention is well defined even when the corrected matrix is not a
    // probability model (a J whose fringes dip below zero); report both.
    try {
        doc["likelihood"] = likelihood_to_json(apply_retention(J, r));
    } catch (const InvariantViolation &e) {
        doc["likelihood"] = nullptr;
        doc["likelihood_error"] = e.what();
        err << "warning: corrected matrix is not a probability model: " << e.what() << "\n";
    }
    Sink sink(cfg.out, out);
    sink.write("calibration.json", dump(doc));
    return kSuccess;
}

std::optional<std::string> find_config_path(const std::vector<std::string> &args) {
    for (size_t i = 1; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            return args[i + 1];
        }
        if (args[i].rfind("--config=", 0) == 0) {
            return args[i].substr(9);
        }
    }
    return std::nullopt;
}

}  // namespace

void RunConfig::validate() const {
    if (trials < 2) {
        throw ConfigError("--trials must be >= 2");
    }
    if (trials_per_plan < 2) {
        throw ConfigError("--trials-per-plan must be >= 2");
    }
    if (N.empty()) {
        throw ConfigError("--N needs at least one value");
    }
    for (int n : N) {
        if (n < 1 || n > resource_cap) {
            throw ConfigError("--N values must lie in [1, " + std::to_string(resource_cap) + "], got " + std::to_string(n));
        }
    }
    parse_fixture_set(fixtures);
    parse_policy_kind(policy);
    parse_heisenberg_convention(heisenberg);
    if (bootstrap_samples < 1000) {
        throw ConfigError("--bootstrap-samples must be >= 1000");
    }
    if (workers < 0) {
        throw ConfigError("--workers must be >= 0");
    }
    if (!(visibility >= 0 && visibility <= 1)) {
        throw ConfigError("--visibility must lie in [0, 1]");
    }
    if (policy_grid < 64) {
        throw ConfigError("--policy-grid must be >= 64");
    }
}

json RunConfig::to_json() const {
    return {
        {"seed", seed},
        {"trials", trials},
        {"trials_per_plan", trials_per_plan},
        {"N", N},
        {"fixtures", fixtures},
        {"policy", policy},
        {"bootstrap_samples", bootstrap_samples},
        {"grid", grid},
        {"policy_grid", policy_grid},
        {"visibility", visibility},
        {"heisenberg", heisenberg},
        {"plan", plan},
        {"J", J},
        {"phi", phi},
        {"state_loss", state_loss},
        {"copies", copies},
        {"resource_cap", resource_cap},
    };
}

void RunConfig::merge(const json &j) {
    if (!j.is_object()) {
        throw ConfigError("config file must hold a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        try {
            if (key == "seed") {
                seed = value.get<uint64_t>();
            } else if (key == "trials") {
                trials = value.get<int>();
            } else if (key == "trials_per_plan") {
                trials_per_plan = value.get<int>();
            } else if (key == "N") {
                N = value.is_array() ? value.get<std::vector<int>>() : std::vector<int>{value.get<int>()};
            } else if (key == "fixtures") {
                fixtures = value.get<std::string>();
            } else if (key == "policy") {
                policy = value.get<std::string>();
            } else if (key == "bootstrap_samples") {
                bootstrap_samples = value.get<int>();
            } else if (key == "out") {
                out = value.get<std::string>();
            } else if (key == "workers") {
                workers = value.get<int>();
            } else if (key == "grid") {
                grid = value.get<int>();
            } else if (key == "policy_grid") {
                policy_grid = value.get<int>();
            } else if (key == "visibility") {
                visibility = value.get<double>();
            } else if (key == "heisenberg") {
                heisenberg = value.get<std::string>();
            } else if (key == "plan") {
                plan = value.get<std::string>();
            } else if (key == "J") {
                J = value.get<std::string>();
            } else if (key == "phi") {
                phi = value.is_number() ? std::to_string(value.get<double>()) : value.get<std::string>();
            } else if (key == "state_loss") {
                state_loss = value.get<bool>();
            } else if (key == "copies") {
                copies = value.get<int>();
            } else if (key == "resource_cap") {
                resource_cap = value.get<int>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        } catch (const json::exception &e) {
            throw ConfigError("config key '" + key + "' has the wrong type: " + e.what());
        }
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    try {
        if (auto path = find_config_path(args)) {
            cfg.merge(read_json_file(*path));
        }
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoError;
    }

    CLI::App app{"Adaptive entanglement-enhanced phase estimation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; command-line flags override it");

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "Master 64-bit seed")->capture_default_str();
        sub->add_option("--out", cfg.out, "Output directory (stdout when omitted)");
        sub->add_option("--workers", cfg.workers, "Worker threads (0 = runtime default)")->capture_default_str();
    };
    auto add_sim = [&](CLI::App *sub) {
        sub->add_option("--trials", cfg.trials, "Trials per data point")->capture_default_str();
        sub->add_option("--N", cfg.N, "Total photon numbers")->delimiter(',');
        sub->add_option("--fixtures", cfg.fixtures, "ideal | experimental")->capture_default_str();
        sub->add_option("--bootstrap-samples", cfg.bootstrap_samples, "Bootstrap resamples")->capture_default_str();
        sub->add_option("--policy-grid", cfg.policy_grid, "Feedback-phase grid size")->capture_default_str();
    };

    std::string derive_class;
    auto *derive = app.add_subcommand("derive", "Derive a detection matrix from the Fock-state model");
    derive->add_option("class", derive_class, "n1 | n2 | n4 | noon-k")->required();
    add_common(derive);

    std::string fixture;
    auto *fisher = app.add_subcommand("fisher", "Fisher-information curve of a detection model");
    fisher->add_option("fixture", fixture, "a-ideal | b-ideal | gamma-ideal | a-exp | b-exp | gamma-exp | noon-k[@v]")
        ->required();
    fisher->add_option("--grid", cfg.grid, "Scan points over [0, 2pi)")->capture_default_str();
    fisher->add_option("--copies", cfg.copies, "Independent copies measured jointly")->capture_default_str();
    add_common(fisher);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo phase measurement with reference curves");
    add_common(simulate);
    add_sim(simulate);
    simulate->add_option("--policy", cfg.policy, "adaptive | sql")->capture_default_str();
    simulate->add_option("--plan", cfg.plan, "Plan file (JSON); overrides --N");
    simulate->add_option("--visibility", cfg.visibility, "Visibility of the single-photon reference scheme")
        ->capture_default_str();
    simulate->add_option("--heisenberg", cfg.heisenberg, "tan | pi-over-n")->capture_default_str();
    simulate->add_option("--phi", cfg.phi, "random or a fixed phase in radians")->capture_default_str();
    simulate->add_flag("--state-loss", cfg.state_loss, "Discard detections with the laboratory loss table");

    auto *optimize = app.add_subcommand("optimize", "Rank block-structured measurement sequences");
    add_common(optimize);
    add_sim(optimize);
    optimize->add_option("--trials-per-plan", cfg.trials_per_plan, "Trials per candidate plan")->capture_default_str();

    auto *calibrate = app.add_subcommand("calibrate", "Retention and loss from a fitted J matrix");
    add_common(calibrate);
    calibrate->add_option("--J", cfg.J, "J matrix file (JSON)");

    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        cfg.validate();
        if (derive->parsed()) {
            return cmd_derive(derive_class, cfg, out, err);
        }
        if (fisher->parsed()) {
            return cmd_fisher(fixture, cfg, out, err);
        }
        if (simulate->parsed()) {
            return cmd_simulate(cfg, out, err);
        }
        if (optimize->parsed()) {
            return cmd_optimize(cfg, out, err);
        }
        return cmd_calibrate(cfg, out, err);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvariantViolation &e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariantViolation;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace aphase::cli
