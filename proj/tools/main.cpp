// sbcn: inference of cancer-progression Bayesian networks / SBCNs from binary
// mutation matrices with an elitist GA, plus benchmark generation, arc-level
// evaluation, bootstrap confidence and a controller/worker distributed runner.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sbcn/datagen.hpp"
#include "sbcn/dist/runner.hpp"
#include "sbcn/dist/worker.hpp"
#include "sbcn/errors.hpp"
#include "sbcn/ga.hpp"
#include "sbcn/metrics.hpp"
#include "sbcn/network_io.hpp"

#include "svg_chart.hpp"

namespace fs = std::filesystem;
using namespace sbcn;

namespace {

constexpr uint64_t kInferJobTag = 0x1FE22AB5ULL;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Flat key=value config files ('#'/';' comments). Keys are long option names
// without the leading dashes; command-line flags override file values.
std::vector<std::pair<std::string, std::string>> read_flat_ini(const std::string& path) {
    std::stringstream in(read_text_file(path));
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        const size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string{};
        const size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw DataError("config line is not key=value", line_no);
        entries.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return entries;
}

void add_config_option(CLI::App* cmd) {
    // documentation only; the file is expanded into tokens before parsing
    std::string dummy;
    cmd->add_option("--config", dummy, "Flat key=value file of these options (flags override)");
}

/// Strips --config FILE from args and splices the file's keys as --key=value
/// right after the subcommand name, so later command-line flags take
/// precedence under the TakeLast policy.
std::vector<std::string> expand_config_arg(std::vector<std::string> args) {
    std::string config_path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ValidationError("--config", "missing file name");
            config_path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (config_path.empty()) return args;

    size_t subcommand_pos = args.size();
    for (size_t i = 0; i < args.size(); ++i) {
        if (!args[i].empty() && args[i][0] != '-') {
            subcommand_pos = i;
            break;
        }
    }
    if (subcommand_pos == args.size())
        throw CLI::ValidationError("--config", "a subcommand is required");

    std::vector<std::string> tokens;
    for (const auto& [key, value] : read_flat_ini(config_path))
        tokens.push_back("--" + key + "=" + value);
    args.insert(args.begin() + subcommand_pos + 1, tokens.begin(), tokens.end());
    return args;
}

std::string noise_dir_name(double noise) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", noise);
    return buf;
}

std::vector<double> parse_levels(const std::string& csv) {
    std::vector<double> levels;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) levels.push_back(std::stod(item));
    if (levels.empty()) throw CLI::ValidationError("--noise-levels", "no levels given");
    return levels;
}

std::vector<int> parse_counts(const std::string& csv) {
    std::vector<int> counts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) counts.push_back(std::stoi(item));
    return counts;
}

// --- shared flag bundles -----------------------------------------------------

struct GaFlags {
    int pop = 64;
    int gens = 100;
    double pc = 1.0;
    double pm = 0.01;
    std::string regularizer = "bic";
    std::string mode = "bn";
    uint64_t seed = 0;
    int threads = 0; // fitness workers; 0 = hardware
    std::string workers;   // remote endpoints, comma separated
    int local_workers = 0; // local pool size for batch commands; 0 = hardware
};

void add_ga_flags(CLI::App* cmd, GaFlags& f, bool batch) {
    cmd->add_option("--pop", f.pop, "Population size Q")->capture_default_str();
    cmd->add_option("--gens", f.gens, "Number of generations")->capture_default_str();
    cmd->add_option("--pc", f.pc, "Crossover probability")->capture_default_str();
    cmd->add_option("--pm", f.pm, "Per-bit mutation probability")->capture_default_str();
    cmd->add_option("--regularizer", f.regularizer, "Score regularizer: bic | aic")
        ->check(CLI::IsMember({"bic", "aic"}))
        ->capture_default_str();
    cmd->add_option("--mode", f.mode, "bn (unconstrained) | sbcn (Suppes-constrained)")
        ->check(CLI::IsMember({"bn", "sbcn"}))
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
    cmd->add_option("--threads", f.threads, "Fitness evaluation workers (0 = hardware)")
        ->capture_default_str();
    cmd->add_option("--workers", f.workers, "Remote workers host:port[,host:port...]");
    if (batch)
        cmd->add_option("--local-workers", f.local_workers,
                        "Local worker threads for batches (0 = hardware)")
            ->capture_default_str();
}

GaConfig to_config(const GaFlags& f) {
    GaConfig c;
    c.population_size = f.pop;
    c.generations = f.gens;
    c.crossover_prob = f.pc;
    c.mutation_prob = f.pm;
    c.regularizer = regularizer_from_string(f.regularizer);
    c.constraint_mode =
        f.mode == "sbcn" ? ConstraintMode::Suppes : ConstraintMode::Unconstrained;
    c.seed = f.seed;
    c.validate();
    return c;
}

std::unique_ptr<dist::WorkerPool> make_pool(const GaFlags& f, int ga_threads_per_job) {
    if (!f.workers.empty())
        return std::make_unique<dist::RemotePool>(dist::parse_worker_list(f.workers));
    const int n = f.local_workers > 0 ? f.local_workers : ThreadPool::hardware_workers();
    return std::make_unique<dist::LocalPool>(n, ga_threads_per_job);
}

struct GenFlags {
    int k = 15;
    int m = 100;
    int trees = 40;
    std::string levels = "0,0.05,0.1,0.15,0.2";
    bool forest = false;
    CptRanges ranges;
};

void add_gen_flags(CLI::App* cmd, GenFlags& f) {
    cmd->add_option("--k", f.k, "Number of genes (nodes)")->capture_default_str();
    cmd->add_option("--m", f.m, "Observations per instance")->capture_default_str();
    cmd->add_option("--trees-per-level", f.trees, "Instances per noise level")
        ->capture_default_str();
    cmd->add_option("--noise-levels", f.levels, "Comma-separated flip rates")
        ->capture_default_str();
    cmd->add_flag("--forest", f.forest, "Generate forests instead of single-root trees");
    cmd->add_option("--cpt-root-min", f.ranges.root_min)->capture_default_str();
    cmd->add_option("--cpt-root-max", f.ranges.root_max)->capture_default_str();
    cmd->add_option("--cpt-low-min", f.ranges.low_min)->capture_default_str();
    cmd->add_option("--cpt-low-max", f.ranges.low_max)->capture_default_str();
    cmd->add_option("--cpt-high-min", f.ranges.high_min)->capture_default_str();
    cmd->add_option("--cpt-high-max", f.ranges.high_max)->capture_default_str();
}

// --- benchmark layout ----------------------------------------------------------

void write_instances(const fs::path& dir, const std::vector<BenchmarkInstance>& suite) {
    for (const auto& inst : suite) {
        char idx[16];
        std::snprintf(idx, sizeof(idx), "%03d", inst.index);
        const fs::path inst_dir = dir / noise_dir_name(inst.noise) / idx;
        fs::create_directories(inst_dir);
        inst.data.save_csv((inst_dir / "data.csv").string());
        save_network((inst_dir / "truth.json").string(), inst.model.structure);
        save_model((inst_dir / "model.json").string(), inst.model);
    }
}

struct StoredInstance {
    std::string id; // "<noise>/<index>"
    double noise = 0.0;
    fs::path data_csv;
    fs::path truth_json;
};

std::vector<StoredInstance> scan_instances(const fs::path& dir) {
    std::vector<std::pair<double, fs::path>> noise_dirs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_directory()) continue;
        try {
            noise_dirs.emplace_back(std::stod(entry.path().filename().string()), entry.path());
        } catch (const std::exception&) {
            continue; // not a noise directory
        }
    }
    std::sort(noise_dirs.begin(), noise_dirs.end());

    std::vector<StoredInstance> instances;
    for (const auto& [noise, noise_path] : noise_dirs) {
        std::vector<fs::path> index_dirs;
        for (const auto& entry : fs::directory_iterator(noise_path))
            if (entry.is_directory()) index_dirs.push_back(entry.path());
        std::sort(index_dirs.begin(), index_dirs.end());
        for (const auto& inst_dir : index_dirs) {
            StoredInstance inst;
            inst.id = noise_path.filename().string() + "/" + inst_dir.filename().string();
            inst.noise = noise;
            inst.data_csv = inst_dir / "data.csv";
            inst.truth_json = inst_dir / "truth.json";
            if (fs::exists(inst.data_csv) && fs::exists(inst.truth_json))
                instances.push_back(std::move(inst));
        }
    }
    if (instances.empty()) throw DataError("no benchmark instances under " + dir.string());
    return instances;
}

// --- commands ------------------------------------------------------------------

void cmd_generate(const std::string& out, const GenFlags& gen, uint64_t seed) {
    const auto suite =
        benchmark_suite(gen.trees, gen.k, gen.m, parse_levels(gen.levels), seed, gen.ranges,
                        gen.forest);
    write_instances(out, suite);
    std::cout << "wrote " << suite.size() << " instances under " << out << "\n";
}

void cmd_infer(const std::string& data_path, const GaFlags& flags, const std::string& out,
               std::string history_path, const std::string& emit_mask) {
    const ObservationMatrix d = ObservationMatrix::load_csv(data_path);
    const GaConfig config = to_config(flags);

    if (!emit_mask.empty()) {
        const ConstraintMask mask = prima_facie_mask(d);
        write_text_file(emit_mask, mask_to_json(mask, d.column_labels()));
        if (!mask.degenerate.empty()) {
            std::cerr << "warning: degenerate variables (marginal 0 or 1):";
            for (int j : mask.degenerate) std::cerr << " " << d.column_label(j);
            std::cerr << "\n";
        }
    }

    if (!flags.workers.empty()) {
        dist::JobSpec job;
        job.job_id = "infer";
        job.dataset = dist::DatasetRef::inline_csv(d.to_csv());
        job.config = config;
        dist::RemotePool pool(dist::parse_worker_list(flags.workers));
        const auto outcomes = dist::run_batch({job}, pool);
        save_network(out, outcomes[0].result.best);
        std::cout << "best score " << fmt17(outcomes[0].result.best_score) << " (worker "
                  << outcomes[0].worker_id << ") -> " << out << "\n";
        return;
    }

    const RunResult r = run(config, d, flags.threads);
    save_network(out, r.best);
    if (history_path.empty()) {
        const fs::path p(out);
        history_path = (p.parent_path() / (p.stem().string() + "_history.csv")).string();
    }
    std::string csv = "generation,best_score\n";
    for (size_t g = 0; g < r.score_history.size(); ++g)
        csv += std::to_string(g + 1) + "," + fmt17(r.score_history[g]) + "\n";
    write_text_file(history_path, csv);
    std::cout << "best score " << fmt17(r.best_score) << " in " << fmt17(r.wall_time_seconds)
              << "s -> " << out << "\n";
}

void cmd_mask(const std::string& data_path, const std::string& out) {
    const ObservationMatrix d = ObservationMatrix::load_csv(data_path);
    const ConstraintMask mask = prima_facie_mask(d);
    write_text_file(out, mask_to_json(mask, d.column_labels()));
    int allowed = 0;
    for (uint8_t a : mask.allowed) allowed += a;
    std::cout << "mask: " << allowed << " admissible arcs, " << mask.degenerate.size()
              << " degenerate variables -> " << out << "\n";
}

void cmd_evaluate(const std::string& truth_path, const std::string& inferred_path) {
    const Dag truth = load_network(truth_path);
    const Dag inferred = load_network(inferred_path);
    if (truth.node_count() != inferred.node_count())
        throw DataError("network sizes differ: " + std::to_string(truth.node_count()) + " vs " +
                        std::to_string(inferred.node_count()));
    const ConfusionCounts c = confusion(truth, inferred);
    std::cout << "tp,fp,tn,fn,accuracy,sensitivity,specificity\n"
              << c.tp << "," << c.fp << "," << c.tn << "," << c.fn << "," << fmt17(accuracy(c))
              << "," << fmt17(sensitivity(c)) << "," << fmt17(specificity(c)) << "\n";
}

void cmd_benchmark(const GaFlags& flags, const GenFlags& gen, const std::string& out,
                   std::string dir) {
    const fs::path out_dir(out);
    fs::create_directories(out_dir);
    if (dir.empty()) dir = (out_dir / "instances").string();
    if (!fs::exists(dir)) {
        std::cout << "generating benchmark instances under " << dir << "\n";
        cmd_generate(dir, gen, flags.seed);
    }
    const std::vector<StoredInstance> instances = scan_instances(dir);

    std::vector<dist::JobSpec> jobs;
    jobs.reserve(instances.size());
    const GaConfig base = to_config(flags);
    for (size_t i = 0; i < instances.size(); ++i) {
        dist::JobSpec job;
        job.job_id = instances[i].id;
        job.dataset = dist::DatasetRef::inline_csv(read_text_file(instances[i].data_csv.string()));
        job.config = base;
        job.config.seed = seed_mix(flags.seed ^ kInferJobTag, i);
        jobs.push_back(std::move(job));
    }

    const auto pool = make_pool(flags, 1);
    const auto t0 = std::chrono::steady_clock::now();
    const auto outcomes = dist::run_batch(jobs, *pool);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<InstanceMetrics> rows;
    rows.reserve(outcomes.size());
    std::string results_csv = instance_metrics_csv_header() + "\n";
    for (size_t i = 0; i < outcomes.size(); ++i) {
        const Dag truth = load_network(instances[i].truth_json.string());
        InstanceMetrics m;
        m.instance_id = instances[i].id;
        m.noise = instances[i].noise;
        m.regularizer = flags.regularizer;
        m.constraint_mode = flags.mode;
        m.counts = confusion(truth, outcomes[i].result.best);
        m.accuracy = accuracy(m.counts);
        m.sensitivity = sensitivity(m.counts);
        m.specificity = specificity(m.counts);
        m.score = outcomes[i].result.best_score;
        m.wall_time_s = outcomes[i].result.wall_time_seconds;
        results_csv += to_csv_row(m) + "\n";
        rows.push_back(std::move(m));
    }
    write_text_file((out_dir / "results.csv").string(), results_csv);

    const std::vector<MetricAggregate> agg = aggregate(rows);
    write_text_file((out_dir / "aggregate.csv").string(), aggregate_csv(agg));

    std::vector<std::string> categories;
    tools::BarSeries acc{"accuracy", {}}, sens{"sensitivity", {}}, spec{"specificity", {}};
    for (const auto& a : agg) {
        categories.push_back(noise_dir_name(a.noise));
        acc.values.push_back(a.accuracy_mean);
        sens.values.push_back(a.sensitivity_mean);
        spec.values.push_back(a.specificity_mean);
    }
    write_text_file((out_dir / "metrics.svg").string(),
                    tools::bar_chart_svg("Structure recovery vs noise (" + flags.mode + ", " +
                                             flags.regularizer + ")",
                                         "mean metric", categories, {acc, sens, spec}));

    std::cout << "benchmark: " << outcomes.size() << " instances in " << fmt17(wall) << "s\n";
    std::cout << "noise      accuracy  sensitivity  specificity\n";
    for (const auto& a : agg) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-9s  %8.3f  %11.3f  %11.3f\n",
                      noise_dir_name(a.noise).c_str(), a.accuracy_mean, a.sensitivity_mean,
                      a.specificity_mean);
        std::cout << line;
    }
    std::cout << "results under " << out << "\n";
}

void cmd_bootstrap(const std::string& data_path, int reps, const GaFlags& flags,
                   const std::string& out) {
    const ObservationMatrix d = ObservationMatrix::load_csv(data_path);
    const GaConfig config = to_config(flags);
    const auto pool = make_pool(flags, 1);
    const std::vector<double> freq = dist::bootstrap(d, reps, config, *pool);

    const int k = d.variable_count();
    std::string csv = "source,target,source_label,target_label,frequency\n";
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            csv += std::to_string(i) + "," + std::to_string(j) + "," + d.column_label(i) + "," +
                   d.column_label(j) + "," + fmt17(freq[static_cast<size_t>(i) * k + j]) + "\n";
        }
    write_text_file(out, csv);
    std::cout << "bootstrap: " << reps << " repetitions -> " << out << "\n";
}

void cmd_speedup(const GaFlags& flags, const GenFlags& gen, const std::string& level,
                 int job_count, const std::string& counts_csv, const std::string& out) {
    fs::create_directories(out);
    Rng rng(flags.seed);
    const GenerativeModel model =
        sample_cpts(gen.forest ? random_forest(gen.k, rng) : random_tree(gen.k, rng), rng,
                    gen.ranges);
    const ObservationMatrix d = forward_sample(model, gen.m, rng);
    const GaConfig config = to_config(flags);
    std::vector<int> counts = parse_counts(counts_csv);
    if (counts.empty()) counts = {1, 2, 4, 8};

    std::vector<std::string> categories;
    tools::BarSeries times{"wall time (s)", {}};
    std::string csv;
    std::string title;

    if (level == "threads") {
        // fitness-evaluation threading inside a single optimization
        if (std::find(counts.begin(), counts.end(), 1) == counts.end())
            counts.insert(counts.begin(), 1);
        csv = "threads,wall_time_s,speedup\n";
        title = "Fitness evaluation threading";
        double base = 0.0;
        for (int t : counts) {
            const auto t0 = std::chrono::steady_clock::now();
            (void)run(config, d, t);
            const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (t == counts.front()) base = wall;
            csv += std::to_string(t) + "," + fmt17(wall) + "," + fmt17(base / wall) + "\n";
            categories.push_back(std::to_string(t));
            times.values.push_back(wall);
            std::cout << t << " threads: " << fmt17(wall) << "s\n";
        }
    } else {
        // independent optimizations across local workers
        std::vector<dist::JobSpec> jobs;
        const std::string csv_text = d.to_csv();
        for (int i = 0; i < job_count; ++i) {
            dist::JobSpec job;
            job.job_id = "job-" + std::to_string(i);
            job.dataset = dist::DatasetRef::inline_csv(csv_text);
            job.config = config;
            job.config.seed = seed_mix(flags.seed, static_cast<uint64_t>(i));
            jobs.push_back(std::move(job));
        }
        csv = "workers,wall_time_s,speedup\n";
        title = "Distributed replicate execution (" + std::to_string(job_count) + " jobs)";
        for (const auto& row : dist::speedup_report(jobs, counts)) {
            csv += std::to_string(row.workers) + "," + fmt17(row.wall_time_s) + "," +
                   fmt17(row.speedup) + "\n";
            categories.push_back(std::to_string(row.workers));
            times.values.push_back(row.wall_time_s);
            std::cout << row.workers << " workers: " << fmt17(row.wall_time_s) << "s (speedup "
                      << fmt17(row.speedup) << ")\n";
        }
    }
    const fs::path out_dir(out);
    write_text_file((out_dir / ("speedup_" + level + ".csv")).string(), csv);
    write_text_file((out_dir / ("speedup_" + level + ".svg")).string(),
                    tools::bar_chart_svg(title, "wall time (s)", categories, {times}));
}

void cmd_worker(const std::string& listen, int slots, int threads, bool once,
                const std::string& id) {
    const auto [host, port] = dist::parse_endpoint(listen);
    dist::WorkerOptions options;
    options.host = host;
    options.port = port;
    options.slots = slots;
    options.ga_threads = threads;
    options.once = once;
    options.worker_id = id;
    dist::WorkerServer server(options);
    std::cout << "listening on " << host << ":" << server.port() << "\n" << std::flush;
    server.serve();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cancer progression model inference with genetic algorithms"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a synthetic benchmark directory");
    add_config_option(generate);
    GenFlags gen_gen;
    std::string gen_out = "benchmark";
    uint64_t gen_seed = 0;
    generate->add_option("--out", gen_out, "Output directory")->capture_default_str();
    generate->add_option("--seed", gen_seed, "Master seed")->capture_default_str();
    add_gen_flags(generate, gen_gen);
    generate->callback([&] { cmd_generate(gen_out, gen_gen, gen_seed); });

    // infer
    auto* infer = app.add_subcommand("infer", "Learn a network from a binary dataset CSV");
    add_config_option(infer);
    GaFlags infer_flags;
    std::string infer_data, infer_out = "inferred.json", infer_history, infer_mask;
    infer->add_option("data", infer_data, "Dataset CSV")->required();
    infer->add_option("-o,--output", infer_out, "Network JSON output")->capture_default_str();
    infer->add_option("--history", infer_history, "Per-generation best-score CSV");
    infer->add_option("--emit-mask", infer_mask, "Also write the Suppes mask as network JSON");
    add_ga_flags(infer, infer_flags, false);
    infer->callback(
        [&] { cmd_infer(infer_data, infer_flags, infer_out, infer_history, infer_mask); });

    // mask
    auto* mask = app.add_subcommand("mask", "Export the prima-facie admissibility mask");
    std::string mask_data, mask_out = "mask.json";
    mask->add_option("data", mask_data, "Dataset CSV")->required();
    mask->add_option("-o,--output", mask_out, "Mask JSON output")->capture_default_str();
    mask->callback([&] { cmd_mask(mask_data, mask_out); });

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Arc-level metrics of inferred vs truth");
    std::string eval_truth, eval_inferred;
    evaluate->add_option("truth", eval_truth, "Ground-truth network JSON")->required();
    evaluate->add_option("inferred", eval_inferred, "Inferred network JSON")->required();
    evaluate->callback([&] { cmd_evaluate(eval_truth, eval_inferred); });

    // benchmark
    auto* benchmark =
        app.add_subcommand("benchmark", "Run inference over a benchmark, aggregate metrics");
    add_config_option(benchmark);
    GaFlags bench_flags;
    GenFlags bench_gen;
    std::string bench_out = "bench_results", bench_dir;
    benchmark->add_option("--out", bench_out, "Results directory")->capture_default_str();
    benchmark->add_option("--dir", bench_dir, "Existing benchmark directory (default: generate)");
    add_ga_flags(benchmark, bench_flags, true);
    add_gen_flags(benchmark, bench_gen);
    benchmark->callback([&] { cmd_benchmark(bench_flags, bench_gen, bench_out, bench_dir); });

    // bootstrap
    auto* boot = app.add_subcommand("bootstrap", "Arc confidence via resampled re-inference");
    add_config_option(boot);
    GaFlags boot_flags;
    std::string boot_data, boot_out = "bootstrap.csv";
    int boot_reps = 100;
    boot->add_option("data", boot_data, "Dataset CSV")->required();
    boot->add_option("--reps", boot_reps, "Bootstrap repetitions")->capture_default_str();
    boot->add_option("-o,--output", boot_out, "Frequency CSV output")->capture_default_str();
    add_ga_flags(boot, boot_flags, true);
    boot->callback([&] { cmd_bootstrap(boot_data, boot_reps, boot_flags, boot_out); });

    // speedup
    auto* speedup = app.add_subcommand("speedup", "Measure thread / worker scaling");
    add_config_option(speedup);
    GaFlags sp_flags;
    GenFlags sp_gen;
    std::string sp_level = "jobs", sp_counts, sp_out = "speedup";
    int sp_jobs = 16;
    speedup->add_option("--level", sp_level, "jobs | threads")
        ->check(CLI::IsMember({"jobs", "threads"}))
        ->capture_default_str();
    speedup->add_option("--jobs", sp_jobs, "Batch size for --level jobs")->capture_default_str();
    speedup->add_option("--counts", sp_counts, "Comma-separated worker/thread counts");
    speedup->add_option("--out", sp_out, "Output directory")->capture_default_str();
    add_ga_flags(speedup, sp_flags, false);
    add_gen_flags(speedup, sp_gen);
    speedup->callback(
        [&] { cmd_speedup(sp_flags, sp_gen, sp_level, sp_jobs, sp_counts, sp_out); });

    // worker
    auto* worker = app.add_subcommand("worker", "Serve GA jobs over TCP");
    std::string w_listen = "127.0.0.1:0", w_id;
    int w_slots = 1, w_threads = 1;
    bool w_once = false;
    worker->add_option("--listen", w_listen, "host:port (port 0 = ephemeral)")
        ->capture_default_str();
    worker->add_option("--slots", w_slots, "Concurrent jobs per session")->capture_default_str();
    worker->add_option("--threads", w_threads, "Fitness workers per job")->capture_default_str();
    worker->add_flag("--once", w_once, "Exit after the first controller session");
    worker->add_option("--id", w_id, "Worker id reported in the hello");
    worker->callback([&] { cmd_worker(w_listen, w_slots, w_threads, w_once, w_id); });

    try {
        // file values must lose against explicit flags, so every option takes
        // the last occurrence
        for (auto* sub : app.get_subcommands({}))
            for (auto* opt : sub->get_options())
                opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config_arg(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what();
        if (e.row() > 0) {
            std::cerr << " (row " << e.row();
            if (e.column() > 0) std::cerr << ", column " << e.column();
            std::cerr << ")";
        }
        std::cerr << "\n";
        return 2;
    } catch (const DistError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
