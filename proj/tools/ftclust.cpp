// ftclust: batch front end for transactional clustering.
//
// Subcommands:
//   cluster   run one algorithm, write a JSON report and an assignments CSV
//   estimate  sweep the overlap threshold and print the chosen alpha
//   compare   run ftree and largeitem across a theta grid, emit a CSV
//   bench     time a run on growing dataset prefixes, emit a CSV
//
// Exit codes: 0 success, 1 bad arguments, 2 ingestion failure, 3 internal
// invariant violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftc/estimator.hpp"
#include "ftc/merge.hpp"
#include "ftc/pipeline.hpp"

namespace {

struct DatasetOptions {
    std::string input;
    std::string format = "csv";
    std::string delimiter = ",";
    std::string label_col = "none";
    std::vector<int> ignore_cols;
    bool header = false;
};

void add_dataset_options(CLI::App* cmd, DatasetOptions& opts) {
    cmd->add_option("--input", opts.input, "input dataset file")->required();
    cmd->add_option("--format", opts.format, "csv | uci-mushroom | uci-zoo")
        ->check(CLI::IsMember({"csv", "uci-mushroom", "uci-zoo"}));
    cmd->add_option("--delimiter", opts.delimiter, "field delimiter (csv format)");
    cmd->add_option("--label-col", opts.label_col,
                    "label column index, negative counts from the end, or 'none'");
    cmd->add_option("--ignore-cols", opts.ignore_cols, "column indices to drop")
        ->delimiter(',');
    cmd->add_flag("--header", opts.header, "skip the first row");
}

ftc::TransactionDataset load_dataset(const DatasetOptions& opts) {
    ftc::IngestFormat format;
    if (opts.format == "uci-mushroom") {
        format = ftc::mushroom_format();
    } else if (opts.format == "uci-zoo") {
        format = ftc::zoo_format();
    } else {
        if (opts.delimiter.size() != 1) {
            throw std::invalid_argument("--delimiter: expected a single character");
        }
        format.delimiter = opts.delimiter[0];
        format.ignored_columns = opts.ignore_cols;
        if (opts.label_col != "none") {
            format.label_column = std::stoi(opts.label_col);
        }
    }
    format.header = opts.header;
    return ftc::ingest(opts.input, format);
}

void check_theta(double theta) {
    if (!(theta > 0.0) || theta > 1.0) {
        throw std::invalid_argument("--theta: must be in (0, 1]");
    }
}

void check_alpha(double alpha) {
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("--alpha: must be in [0, 1]");
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    return out;
}

std::string fmt_double(double x) { return nlohmann::json(x).dump(); }

// --- cluster ---------------------------------------------------------------

struct ClusterArgs {
    DatasetOptions data;
    std::string algorithm = "ftree";
    double theta = 0.8;
    std::string alpha = "0.8";  // number or "auto"
    double weight = 1.0;
    double sample = 1.0;
    std::uint64_t seed = 0;
    std::string output;
    std::string assignments;
    bool members = false;
};

int run_cluster(const ClusterArgs& args) {
    check_theta(args.theta);
    ftc::TransactionDataset dataset = load_dataset(args.data);

    ftc::RunReport report;
    if (args.algorithm == "largeitem") {
        ftc::LargeItemConfig config;
        config.theta = args.theta;
        config.w = args.weight;
        if (config.w < 0) throw std::invalid_argument("--weight: must be >= 0");
        report = ftc::run_largeitem(dataset, config);
    } else if (args.alpha == "auto") {
        ftc::EstimatorConfig config;
        config.theta = args.theta;
        config.sample_fraction = args.sample;
        config.seed = args.seed;
        report = ftc::run_fcso(dataset, config);
    } else {
        ftc::FTreeConfig config;
        config.theta = args.theta;
        config.alpha = std::stod(args.alpha);
        check_alpha(config.alpha);
        report = ftc::run_ftree(dataset, config);
    }

    ftc::validate_partition(report.clustering);

    const std::string json = ftc::report_to_json(report, args.members);
    if (args.output.empty()) {
        std::cout << json;
    } else {
        open_output(args.output) << json;
    }
    if (!args.assignments.empty()) {
        auto out = open_output(args.assignments);
        ftc::write_assignments_csv(report.clustering, out);
    }
    return 0;
}

// --- estimate ----------------------------------------------------------------

struct EstimateArgs {
    DatasetOptions data;
    double theta = 0.8;
    double step = 0.1;
    double sample = 1.0;
    std::uint64_t seed = 0;
    std::string output;
};

int run_estimate(const EstimateArgs& args) {
    check_theta(args.theta);
    ftc::TransactionDataset dataset = load_dataset(args.data);
    if (!dataset.has_labels()) {
        std::cerr << "estimate: dataset has no labels\n";
        return 2;
    }

    ftc::EstimatorConfig config;
    config.theta = args.theta;
    config.step = args.step;
    config.sample_fraction = args.sample;
    config.seed = args.seed;
    ftc::AlphaReport report = ftc::estimate_alpha(dataset, config);

    if (!args.output.empty()) {
        auto out = open_output(args.output);
        ftc::write_alpha_csv(report, out);
    }
    std::cout << fmt_double(report.chosen_alpha) << "\n";
    return 0;
}

// --- compare -----------------------------------------------------------------

struct CompareArgs {
    DatasetOptions data;
    std::vector<double> thetas;
    double alpha = 0.8;
    double weight = 1.0;
    std::string output;
};

void write_compare_row(std::ostream& out, const ftc::RunReport& report) {
    out << report.algorithm << "," << fmt_double(report.theta) << ","
        << report.clusters_before_merge << "," << report.clustering.clusters.size() << ",";
    if (report.metrics.purity) out << fmt_double(*report.metrics.purity);
    out << ",";
    if (report.metrics.rmsstd) out << fmt_double(*report.metrics.rmsstd);
    out << "," << std::fixed << std::setprecision(3) << report.timings.allocation_ms() << ","
        << report.timings.refine_ms << "," << report.timings.total_ms()
        << std::defaultfloat << "\n";
}

int run_compare(const CompareArgs& args) {
    if (args.thetas.empty()) throw std::invalid_argument("--theta: at least one value required");
    for (double theta : args.thetas) check_theta(theta);
    check_alpha(args.alpha);
    if (args.weight < 0) throw std::invalid_argument("--weight: must be >= 0");

    ftc::TransactionDataset dataset = load_dataset(args.data);

    std::ostringstream csv;
    csv << "algorithm,theta,clusters_before_merge,clusters_after,purity,rmsstd,"
           "time_alloc_ms,time_refine_ms,time_total_ms\n";
    for (double theta : args.thetas) {
        ftc::FTreeConfig ft{theta, args.alpha};
        ftc::RunReport ftree_report = ftc::run_ftree(dataset, ft);
        ftc::validate_partition(ftree_report.clustering);
        write_compare_row(csv, ftree_report);

        ftc::LargeItemConfig li;
        li.theta = theta;
        li.w = args.weight;
        ftc::RunReport li_report = ftc::run_largeitem(dataset, li);
        ftc::validate_partition(li_report.clustering);
        write_compare_row(csv, li_report);
    }

    if (args.output.empty()) {
        std::cout << csv.str();
    } else {
        open_output(args.output) << csv.str();
    }
    return 0;
}

// --- bench -------------------------------------------------------------------

struct BenchArgs {
    DatasetOptions data;
    std::vector<double> fractions{0.1, 0.5, 1.0};
    std::string algorithm = "ftree";
    double theta = 0.8;
    double alpha = 0.8;
    double weight = 1.0;
    std::uint64_t seed = 0;
    std::string output;
};

ftc::TransactionDataset prefix_dataset(const ftc::TransactionDataset& dataset, std::size_t n) {
    ftc::TransactionDataset prefix;
    for (ftc::TransactionId tid = 0; tid < n; ++tid) {
        const ftc::Transaction& t = dataset.transaction(tid);
        std::vector<ftc::ItemId> items;
        items.reserve(t.items.size());
        for (ftc::ItemId item : t.items) {
            const ftc::Item& def = dataset.dictionary().item(item);
            items.push_back(prefix.dictionary().intern(def.attribute, def.value));
        }
        std::optional<ftc::LabelId> label;
        if (t.label) label = prefix.intern_label(dataset.label_name(*t.label));
        prefix.add_transaction(std::move(items), label);
    }
    return prefix;
}

int run_bench(const BenchArgs& args) {
    check_theta(args.theta);
    check_alpha(args.alpha);
    for (double f : args.fractions) {
        if (!(f > 0.0) || f > 1.0) {
            throw std::invalid_argument("--fractions: values must be in (0, 1]");
        }
    }

    ftc::TransactionDataset dataset = load_dataset(args.data);

    std::ostringstream csv;
    csv << "fraction,n,time_ms\n";
    for (double fraction : args.fractions) {
        const auto n = static_cast<std::size_t>(
            std::llround(fraction * static_cast<double>(dataset.size())));
        ftc::TransactionDataset prefix = prefix_dataset(dataset, std::max<std::size_t>(1, n));

        double time_ms = 0;
        if (args.algorithm == "largeitem") {
            ftc::LargeItemConfig config;
            config.theta = args.theta;
            config.w = args.weight;
            time_ms = ftc::run_largeitem(prefix, config).timings.total_ms();
        } else {
            ftc::FTreeConfig config{args.theta, args.alpha};
            time_ms = ftc::run_ftree(prefix, config).timings.total_ms();
        }
        csv << fmt_double(fraction) << "," << prefix.size() << "," << std::fixed
            << std::setprecision(3) << time_ms << std::defaultfloat << "\n";
    }

    if (args.output.empty()) {
        std::cout << csv.str();
    } else {
        open_output(args.output) << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-Tree transactional clustering toolkit"};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    CLI::App* cluster = app.add_subcommand("cluster", "cluster a dataset and write reports");
    add_dataset_options(cluster, cluster_args.data);
    cluster->add_option("--algorithm", cluster_args.algorithm, "ftree | largeitem")
        ->check(CLI::IsMember({"ftree", "largeitem"}));
    cluster->add_option("--theta", cluster_args.theta, "minimum support in (0, 1]");
    cluster->add_option("--alpha", cluster_args.alpha, "overlap threshold in [0, 1], or 'auto'");
    cluster->add_option("--weight", cluster_args.weight, "largeitem intra weight");
    cluster->add_option("--sample", cluster_args.sample, "estimator sample fraction (alpha=auto)");
    cluster->add_option("--seed", cluster_args.seed, "sampling seed");
    cluster->add_option("--output", cluster_args.output, "report JSON path (default stdout)");
    cluster->add_option("--assignments", cluster_args.assignments, "assignments CSV path");
    cluster->add_flag("--members", cluster_args.members, "include member ids in the JSON");

    EstimateArgs estimate_args;
    CLI::App* estimate = app.add_subcommand("estimate", "estimate the overlap threshold");
    add_dataset_options(estimate, estimate_args.data);
    estimate->add_option("--theta", estimate_args.theta, "minimum support in (0, 1]");
    estimate->add_option("--step", estimate_args.step, "sweep step (default 0.1)");
    estimate->add_option("--sample", estimate_args.sample, "stratified sample fraction");
    estimate->add_option("--seed", estimate_args.seed, "sampling seed");
    estimate->add_option("--output", estimate_args.output, "sweep CSV path");

    CompareArgs compare_args;
    CLI::App* compare = app.add_subcommand("compare", "compare ftree and largeitem over thetas");
    add_dataset_options(compare, compare_args.data);
    compare->add_option("--theta", compare_args.thetas, "comma-separated theta values")
        ->required()
        ->delimiter(',');
    compare->add_option("--alpha", compare_args.alpha, "ftree overlap threshold");
    compare->add_option("--weight", compare_args.weight, "largeitem intra weight");
    compare->add_option("--output", compare_args.output, "comparison CSV path (default stdout)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time runs on dataset prefixes");
    add_dataset_options(bench, bench_args.data);
    bench->add_option("--fractions", bench_args.fractions, "prefix fractions in (0, 1]")
        ->delimiter(',');
    bench->add_option("--algorithm", bench_args.algorithm, "ftree | largeitem")
        ->check(CLI::IsMember({"ftree", "largeitem"}));
    bench->add_option("--theta", bench_args.theta, "minimum support in (0, 1]");
    bench->add_option("--alpha", bench_args.alpha, "ftree overlap threshold");
    bench->add_option("--weight", bench_args.weight, "largeitem intra weight");
    bench->add_option("--seed", bench_args.seed, "reserved for sampling reproducibility");
    bench->add_option("--output", bench_args.output, "scaling CSV path (default stdout)");

    try {
        app.parse(argc, argv);
        if (cluster->parsed()) return run_cluster(cluster_args);
        if (estimate->parsed()) return run_estimate(estimate_args);
        if (compare->parsed()) return run_compare(compare_args);
        if (bench->parsed()) return run_bench(bench_args);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ftc::IngestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
