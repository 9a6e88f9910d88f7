#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mse/csv.hpp"
#include "mse/dendrogram.hpp"
#include "mse/errors.hpp"
#include "mse/generators.hpp"
#include "mse/json_util.hpp"
#include "mse/metrics.hpp"
#include "mse/pipeline.hpp"
#include "mse/separability.hpp"

namespace {

using nlohmann::ordered_json;

struct InputFlags {
    std::string path;
    std::string label_column;
    bool no_header = false;
    std::string metric = "euclidean";
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
    cmd->add_option("--input", flags.path, "input points CSV")->required();
    cmd->add_option("--label-column", flags.label_column,
                    "column holding ground-truth labels (name or zero-based index)");
    cmd->add_flag("--no-header", flags.no_header, "input has no header row");
    cmd->add_option("--metric", flags.metric, "euclidean|sqeuclidean|manhattan")
        ->check(CLI::IsMember({"euclidean", "sqeuclidean", "manhattan"}));
}

mse::Metric make_metric(const std::string& name) {
    if (name == "sqeuclidean") return mse::Metric::squared_euclidean();
    if (name == "manhattan") return mse::Metric::manhattan();
    return mse::Metric::euclidean();
}

struct LoadedInput {
    mse::Dataset dataset;
    std::vector<int> truth;  // empty when the file had no label column
};

LoadedInput load_input(const InputFlags& flags) {
    mse::CsvOptions opts;
    opts.header = !flags.no_header;
    if (!flags.label_column.empty()) {
        bool numeric = !flags.label_column.empty();
        for (char c : flags.label_column) numeric = numeric && (c >= '0' && c <= '9');
        if (numeric) {
            opts.label_index = std::stoi(flags.label_column);
        } else {
            opts.label_name = flags.label_column;
        }
    }
    mse::LoadedCsv csv = mse::load_csv(flags.path, opts);
    return {mse::Dataset::from_rows(csv.rows, make_metric(flags.metric)), std::move(csv.labels)};
}

ordered_json input_params(const InputFlags& flags) {
    ordered_json j;
    j["input"] = flags.path;
    j["label_column"] = flags.label_column;
    j["header"] = !flags.no_header;
    j["metric"] = flags.metric;
    return j;
}

double parse_density_ratio(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw mse::InvalidArgument("--density-ratio expects a number or 'inf', got \"" + text +
                                   "\"");
    }
}

void write_report(const std::string& path, const ordered_json& report) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mse::IoError("cannot open for writing: " + path);
    out << report.dump(2) << '\n';
    if (!out) throw mse::IoError("write failed: " + path);
}

void emit_labels(const std::string& path, const std::vector<int>& labels) {
    if (path.empty() || path == "-") {
        mse::write_labels_csv(std::cout, labels);
    } else {
        mse::write_labels_csv(path, labels);
    }
}

void attach_scores(ordered_json& report, const std::vector<int>& pred,
                   const std::vector<int>& truth) {
    if (truth.empty()) return;
    report["ari"] = mse::adjusted_rand_index(pred, truth);
    report["nmi"] = mse::normalized_mutual_information(pred, truth);
}

std::vector<int> resolve_truth(const LoadedInput& input, const std::string& truth_path) {
    if (!truth_path.empty()) return mse::load_labels_csv(truth_path, input.dataset.size());
    return input.truth;
}

int cmd_cluster(const InputFlags& input_flags, int n_p, int k, int min_size,
                const std::string& density_ratio, const std::string& mode, int expansion_n_p,
                const mse::LadderOptions& ladder, const std::string& truth_path,
                const std::string& output, const std::string& report_path) {
    const double d = parse_density_ratio(density_ratio);
    const auto t0 = std::chrono::steady_clock::now();
    LoadedInput input = load_input(input_flags);
    mse::DistanceCache dist(input.dataset);
    mse::SparsityProfile profile = mse::sparsity(dist, n_p);

    mse::MseResult result;
    if (mode == "exact") {
        result = mse::mse_exact(dist, profile, min_size, d, k);
    } else if (mode == "approx") {
        mse::MinAResult found = mse::min_a_approx(dist, profile, min_size, d, k, ladder,
                                                  mse::GreedyVariant::Disjoint, &result.search);
        result.a = found.a;
        result.seeds = std::move(found.seeds);
        result.clustering =
            mse::expand_clusters(dist, profile, result.seeds, &result.expansion);
    } else {
        mse::SparsityProfile expansion_profile =
            (expansion_n_p == n_p) ? profile : mse::sparsity(dist, expansion_n_p);
        result = mse::mse_overlap(dist, profile, min_size, d, k, expansion_profile, ladder);
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    ordered_json report;
    report["command"] = "cluster";
    report["parameters"] = input_params(input_flags);
    report["parameters"]["np"] = n_p;
    report["parameters"]["k"] = k;
    report["parameters"]["min_size"] = min_size;
    report["parameters"]["density_ratio"] = mse::json_real(d);
    report["parameters"]["mode"] = mode;
    report["parameters"]["expansion_np"] = (mode == "overlap") ? expansion_n_p : n_p;
    report["parameters"]["ladder"] = {
        {"start", ladder.start}, {"growth", ladder.growth}, {"max_steps", ladder.max_steps}};
    report["parameters"]["truth"] = truth_path;
    report["n"] = input.dataset.size();
    report["a"] = result.a;
    ordered_json seed_sizes = ordered_json::array();
    for (const auto& c : result.seeds.clusters) seed_sizes.push_back(c.size());
    report["seed_sizes"] = seed_sizes;
    report["greedy_probes"] = result.search.probes;
    report["timing_ms"] = ms;
    attach_scores(report, result.clustering.labels, resolve_truth(input, truth_path));

    emit_labels(output, result.clustering.labels);
    write_report(report_path, report);
    if (!output.empty() && output != "-") {
        std::cout << "clustered " << input.dataset.size() << " points into " << k
                  << " clusters (a=" << result.a << ", " << ms << " ms), labels in " << output
                  << "\n";
    }
    return 0;
}

int cmd_check(const InputFlags& input_flags, const std::string& labels_path, int n_p,
              double tolerance, bool strict_maxima, const std::string& report_path) {
    LoadedInput input = load_input(input_flags);
    const std::vector<int> raw = mse::load_labels_csv(labels_path, input.dataset.size());
    const mse::Clustering clustering = mse::Clustering::from_labels(raw);

    mse::SeparabilityOptions opts;
    opts.rel_tol = tolerance;
    opts.strict_local_maxima = strict_maxima;
    ordered_json report = mse::separability_report(input.dataset, n_p, clustering, opts);
    report["parameters"] = input_params(input_flags);
    report["parameters"]["labels"] = labels_path;
    report["parameters"]["np"] = n_p;
    report["parameters"]["tolerance"] = tolerance;
    report["parameters"]["strict_local_maxima"] = strict_maxima;

    write_report(report_path, report);
    std::cout << report.dump(2) << '\n';
    const bool ok = report["weak"]["verdict"].get<bool>() && report["lm"]["verdict"].get<bool>();
    return ok ? 0 : 4;
}

int cmd_dendrogram(const InputFlags& input_flags, int n_p, std::optional<double> epsilon,
                   std::optional<int> k, const std::string& output) {
    LoadedInput input = load_input(input_flags);
    mse::DistanceCache dist(input.dataset);
    mse::SparsityProfile profile = mse::sparsity(dist, n_p);
    mse::Dendrogram dendro = mse::build_dendrogram(dist, profile);

    ordered_json out;
    if (epsilon) {
        mse::PartialClustering cut = dendro.epsilon_cut(*epsilon);
        out["command"] = "dendrogram";
        out["epsilon"] = *epsilon;
        out["clusters"] = cut.clusters;
        ordered_json noise = ordered_json::array();
        std::vector<int> labels = cut.labels();
        for (int i = 0; i < cut.n; ++i) {
            if (labels[i] < 0) noise.push_back(i);
        }
        out["noise"] = noise;
    } else if (k) {
        std::optional<mse::PartialClustering> cut = dendro.k_cut(*k);
        out["command"] = "dendrogram";
        out["k"] = *k;
        out["found"] = cut.has_value();
        if (cut) {
            out["clusters"] = cut->clusters;
            ordered_json noise = ordered_json::array();
            std::vector<int> labels = cut->labels();
            for (int i = 0; i < cut->n; ++i) {
                if (labels[i] < 0) noise.push_back(i);
            }
            out["noise"] = noise;
        } else {
            out["clusters"] = ordered_json::array();
        }
    } else {
        out = dendro.to_json();
    }

    if (output.empty() || output == "-") {
        std::cout << out.dump(2) << '\n';
    } else {
        write_report(output, out);
    }
    return 0;
}

int cmd_eval(const std::string& pred_path, const std::string& truth_path,
             const std::string& report_path) {
    const std::vector<int> pred = mse::load_labels_csv(pred_path);
    const std::vector<int> truth =
        mse::load_labels_csv(truth_path, static_cast<int>(pred.size()));
    ordered_json out;
    out["ari"] = mse::adjusted_rand_index(pred, truth);
    out["nmi"] = mse::normalized_mutual_information(pred, truth);
    std::cout << out.dump() << '\n';
    if (!report_path.empty()) {
        ordered_json report = out;
        report["parameters"] = {{"pred", pred_path}, {"truth", truth_path}};
        write_report(report_path, report);
    }
    return 0;
}

int cmd_generate(const std::string& kind_name, int n, double noise, std::uint64_t seed,
                 const std::string& output) {
    const mse::DatasetKind kind = mse::parse_dataset_kind(kind_name);
    mse::GeneratedData data = mse::generate_dataset(kind, n, noise, seed);
    mse::write_points_csv(output, data.points, &data.labels);
    write_report(output + ".meta.json", data.metadata);
    std::cout << "wrote " << n << " points to " << output << " (metadata in " << output
              << ".meta.json)\n";
    return 0;
}

int cmd_auto(const InputFlags& input_flags, std::vector<int> n_p_list, int k,
             std::vector<int> m_grid, std::vector<double> d_grid, int expansion_n_p,
             const mse::LadderOptions& ladder, const std::string& truth_path,
             const std::string& output, const std::string& report_path) {
    LoadedInput input = load_input(input_flags);

    std::optional<mse::AutoSelectResult> best;
    int best_np = 0;
    ordered_json sweeps = ordered_json::array();
    std::string first_error;
    for (int n_p : n_p_list) {
        try {
            mse::AutoSelectResult r =
                mse::auto_select(input.dataset, n_p, k, m_grid, d_grid, expansion_n_p, ladder);
            ordered_json sweep;
            sweep["np"] = n_p;
            sweep["m"] = r.m;
            sweep["d"] = r.d;
            sweep["score"] = mse::json_real(r.score);
            sweeps.push_back(sweep);
            if (!best || r.score > best->score) {
                best = std::move(r);
                best_np = n_p;
            }
        } catch (const mse::KUnachievable& e) {
            ordered_json sweep;
            sweep["np"] = n_p;
            sweep["error"] = e.what();
            sweeps.push_back(sweep);
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!best) {
        throw mse::KUnachievable("auto selection failed for every np: " + first_error, -1, -1,
                                 true);
    }

    ordered_json report;
    report["command"] = "auto";
    report["parameters"] = input_params(input_flags);
    report["parameters"]["np"] = n_p_list;
    report["parameters"]["k"] = k;
    report["parameters"]["m_grid"] = m_grid;
    report["parameters"]["d_grid"] = d_grid;
    report["parameters"]["expansion_np"] = expansion_n_p;
    report["parameters"]["ladder"] = {
        {"start", ladder.start}, {"growth", ladder.growth}, {"max_steps", ladder.max_steps}};
    report["parameters"]["truth"] = truth_path;
    report["selected"] = {{"np", best_np},
                          {"m", best->m},
                          {"d", best->d},
                          {"a", best->result.a},
                          {"score", mse::json_real(best->score)}};
    report["sweeps"] = sweeps;
    ordered_json table = ordered_json::array();
    for (const mse::AutoSelectEntry& entry : best->table) {
        ordered_json row;
        row["m"] = entry.m;
        row["d"] = entry.d;
        row["ok"] = entry.ok;
        if (entry.ok) {
            row["score"] = mse::json_real(entry.score);
        } else {
            row["error"] = entry.error;
        }
        table.push_back(row);
    }
    report["grid"] = table;
    attach_scores(report, best->result.clustering.labels, resolve_truth(input, truth_path));

    emit_labels(output, best->result.clustering.labels);
    write_report(report_path, report);
    if (!output.empty() && output != "-") {
        std::cout << "selected np=" << best_np << " m=" << best->m << " d=" << best->d
                  << " (score " << best->score << "), labels in " << output << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Density-based clustering via minimal seed expansion"};
    app.require_subcommand(1);

    InputFlags cluster_input;
    int cluster_np = 0, cluster_k = 0, cluster_min_size = 1, cluster_expansion_np = 2;
    std::string cluster_density = "inf", cluster_mode = "exact";
    std::string cluster_truth, cluster_output, cluster_report;
    mse::LadderOptions cluster_ladder;
    CLI::App* cluster = app.add_subcommand("cluster", "run the clustering pipeline");
    add_input_flags(cluster, cluster_input);
    cluster->add_option("--np", cluster_np, "sparsity neighbor count")->required();
    cluster->add_option("--k", cluster_k, "number of clusters")->required();
    cluster->add_option("--min-size", cluster_min_size, "minimum seed size (M)");
    cluster->add_option("--density-ratio", cluster_density, "seed density cutoff (D), 'inf' allowed");
    cluster->add_option("--mode", cluster_mode, "exact|approx|overlap")
        ->check(CLI::IsMember({"exact", "approx", "overlap"}));
    cluster->add_option("--expansion-np", cluster_expansion_np,
                        "sparsity neighbor count for expansion (overlap mode)");
    cluster->add_option("--ladder-start", cluster_ladder.start, "first inflation probed");
    cluster->add_option("--ladder-growth", cluster_ladder.growth, "geometric ladder ratio");
    cluster->add_option("--ladder-steps", cluster_ladder.max_steps, "maximum ladder rungs");
    cluster->add_option("--truth", cluster_truth, "ground-truth labels CSV for ARI/NMI");
    cluster->add_option("--output", cluster_output, "labels CSV path ('-' = stdout)");
    cluster->add_option("--report", cluster_report, "JSON run report path");

    InputFlags check_input;
    std::string check_labels, check_report;
    int check_np = 0;
    double check_tolerance = 0.0;
    bool check_strict = false;
    CLI::App* check = app.add_subcommand("check", "certify separability of a labeling");
    add_input_flags(check, check_input);
    check->add_option("--labels", check_labels, "labels CSV to certify")->required();
    check->add_option("--np", check_np, "sparsity neighbor count")->required();
    check->add_option("--tolerance", check_tolerance, "relative tolerance for comparisons");
    check->add_flag("--strict-local-maxima", check_strict,
                    "use the strict-inequality local-maximum variant");
    check->add_option("--report", check_report, "JSON report path");

    InputFlags dendro_input;
    int dendro_np = 0;
    double dendro_eps = 0.0;
    int dendro_k = 0;
    std::string dendro_output;
    CLI::App* dendro = app.add_subcommand("dendrogram", "emit the density dendrogram or a cut");
    add_input_flags(dendro, dendro_input);
    dendro->add_option("--np", dendro_np, "sparsity neighbor count")->required();
    CLI::Option* dendro_eps_opt = dendro->add_option("--epsilon", dendro_eps, "emit this cut");
    CLI::Option* dendro_k_opt =
        dendro->add_option("--k", dendro_k, "emit the unique k-cluster cut if it exists");
    dendro_eps_opt->excludes(dendro_k_opt);
    dendro->add_option("--output", dendro_output, "JSON path ('-' = stdout)");

    std::string eval_pred, eval_truth, eval_report;
    CLI::App* eval = app.add_subcommand("eval", "score predicted labels against truth");
    eval->add_option("--pred", eval_pred, "predicted labels CSV")->required();
    eval->add_option("--truth", eval_truth, "ground-truth labels CSV")->required();
    eval->add_option("--report", eval_report, "JSON report path");

    std::string gen_kind, gen_output;
    int gen_n = 0;
    double gen_noise = 0.0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen = app.add_subcommand("generate", "write a synthetic benchmark dataset");
    gen->add_option("--kind", gen_kind,
                    "two_circles|two_moons|blobs|anisotropic|varied_blobs")
        ->required();
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--noise", gen_noise, "noise level (0 = kind default)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--output", gen_output, "points CSV path")->required();

    InputFlags auto_input;
    std::vector<int> auto_np;
    int auto_k = 0, auto_expansion_np = 2;
    std::vector<int> auto_m_grid;
    std::vector<double> auto_d_grid;
    std::string auto_truth, auto_output, auto_report;
    mse::LadderOptions auto_ladder;
    CLI::App* auto_cmd = app.add_subcommand("auto", "grid-search m and d by internal score");
    add_input_flags(auto_cmd, auto_input);
    auto_cmd->add_option("--np", auto_np, "sparsity neighbor count(s) to sweep")
        ->required()
        ->delimiter(',');
    auto_cmd->add_option("--k", auto_k, "number of clusters")->required();
    auto_cmd->add_option("--m-grid", auto_m_grid, "candidate minimum seed sizes")->delimiter(',');
    auto_cmd->add_option("--d-grid", auto_d_grid, "candidate density cutoffs")->delimiter(',');
    auto_cmd->add_option("--expansion-np", auto_expansion_np, "expansion sparsity neighbors");
    auto_cmd->add_option("--ladder-start", auto_ladder.start, "first inflation probed");
    auto_cmd->add_option("--ladder-growth", auto_ladder.growth, "geometric ladder ratio");
    auto_cmd->add_option("--ladder-steps", auto_ladder.max_steps, "maximum ladder rungs");
    auto_cmd->add_option("--truth", auto_truth, "ground-truth labels CSV for ARI/NMI");
    auto_cmd->add_option("--output", auto_output, "labels CSV path ('-' = stdout)");
    auto_cmd->add_option("--report", auto_report, "JSON run report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cluster->parsed()) {
            return cmd_cluster(cluster_input, cluster_np, cluster_k, cluster_min_size,
                               cluster_density, cluster_mode, cluster_expansion_np,
                               cluster_ladder, cluster_truth, cluster_output, cluster_report);
        }
        if (check->parsed()) {
            return cmd_check(check_input, check_labels, check_np, check_tolerance, check_strict,
                             check_report);
        }
        if (dendro->parsed()) {
            std::optional<double> eps;
            std::optional<int> kk;
            if (dendro_eps_opt->count()) eps = dendro_eps;
            if (dendro_k_opt->count()) kk = dendro_k;
            return cmd_dendrogram(dendro_input, dendro_np, eps, kk, dendro_output);
        }
        if (eval->parsed()) return cmd_eval(eval_pred, eval_truth, eval_report);
        if (gen->parsed()) return cmd_generate(gen_kind, gen_n, gen_noise, gen_seed, gen_output);
        if (auto_cmd->parsed()) {
            return cmd_auto(auto_input, auto_np, auto_k, auto_m_grid, auto_d_grid,
                            auto_expansion_np, auto_ladder, auto_truth, auto_output, auto_report);
        }
    } catch (const mse::KUnachievable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const mse::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mse::InvalidDataset& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mse::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const mse::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const mse::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
