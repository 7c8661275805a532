// techrank: rank companies and technologies from Crunchbase-style exports.
//
//   techrank ingest  --config run.json [--out DIR]
//   techrank rank    --config run.json [--seed N] [--subset N] [--trajectory] [--strict] ...
//   techrank compare --ours companies.csv --external other.csv
//   techrank bench   --config run.json --sizes 10,100,500
//
// Exit codes: 0 success, 1 configuration error, 2 data error, 3 walker did
// not converge (rank --strict only).

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "techrank/error.hpp"
#include "techrank/pipeline.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitNotConverged = 3;

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> subset;
    std::optional<std::string> out;
    std::optional<std::string> grid;
    std::optional<double> tolerance;
    std::optional<std::size_t> max_iter;
    std::optional<unsigned> threads;
};

void add_run_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "Seed for company subset sampling");
    cmd->add_option("--subset", o.subset, "Rank a random sample of this many companies");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--grid", o.grid, "Calibration grid \"amin,amax,bmin,bmax,step\"");
    cmd->add_option("--tolerance", o.tolerance, "Walker convergence tolerance");
    cmd->add_option("--max-iter", o.max_iter, "Walker iteration cap");
    cmd->add_option("--threads", o.threads, "Calibration worker threads (0 = all cores)");
}

techrank::RunConfig resolve_config(const Overrides& o) {
    techrank::RunConfig config = techrank::load_run_config(o.config);
    if (o.seed) config.seed = *o.seed;
    if (o.subset) config.subset = *o.subset;
    if (o.out) config.output_dir = *o.out;
    if (o.grid) config.grid = techrank::GridSpec::parse(*o.grid);
    if (o.tolerance) config.walker.tolerance = *o.tolerance;
    if (o.max_iter) config.walker.max_iterations = *o.max_iter;
    if (o.threads) config.threads = *o.threads;
    config.validate();
    return config;
}

std::vector<techrank::RankedEntity> read_ranking(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw techrank::ParseError("cannot open '" + path + "'");
    return techrank::read_ranking_csv(in);
}

std::vector<techrank::ExternalRank> read_external(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw techrank::ParseError("cannot open '" + path + "'");
    return techrank::read_external_ranks(in);
}

void print_top(const char* title, const techrank::LayerReport& report, std::size_t n) {
    std::cout << title << " (alpha=" << report.alpha << ", beta=" << report.beta << ", rho=" << report.rho
              << ", iterations=" << report.iterations << (report.converged ? "" : ", NOT converged") << ")\n";
    for (std::size_t i = 0; i < std::min(n, report.entities.size()); ++i) {
        const auto& e = report.entities[i];
        std::cout << "  " << e.rank << ". " << e.name << "  " << e.weight << "  (degree rank " << e.degree_rank
                  << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TechRank: bipartite company/technology ranking calibrated on investor preferences"};
    app.require_subcommand(1);

    Overrides ingest_opts;
    auto* ingest_cmd = app.add_subcommand("ingest", "Parse and filter inputs, write the graphs");
    ingest_cmd->add_option("--config", ingest_opts.config, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    ingest_cmd->add_option("--out", ingest_opts.out, "Output directory");

    Overrides rank_opts;
    bool trajectory = false;
    bool strict = false;
    auto* rank_cmd = app.add_subcommand("rank", "Calibrate (alpha, beta) and rank both layers");
    add_run_options(rank_cmd, rank_opts);
    rank_cmd->add_flag("--trajectory", trajectory, "Also write per-iteration weights");
    rank_cmd->add_flag("--strict", strict, "Exit with code 3 if the final walk does not converge");

    std::string ours_path;
    std::string external_path;
    auto* compare_cmd = app.add_subcommand("compare", "Spearman correlation against an external ranking");
    compare_cmd->add_option("--ours", ours_path, "companies.csv or technologies.csv from `rank`")
        ->required()
        ->check(CLI::ExistingFile);
    compare_cmd->add_option("--external", external_path, "CSV with id,rank columns")
        ->required()
        ->check(CLI::ExistingFile);

    Overrides bench_opts;
    std::vector<std::size_t> sizes;
    auto* bench_cmd = app.add_subcommand("bench", "Time calibration and convergence on growing samples");
    add_run_options(bench_cmd, bench_opts);
    bench_cmd->add_option("--sizes", sizes, "Company sample sizes")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*ingest_cmd) {
            techrank::RunConfig config = techrank::load_run_config(ingest_opts.config);
            if (ingest_opts.out) config.output_dir = *ingest_opts.out;
            const auto result = techrank::cmd_ingest(config);
            const auto& s = result.summary;
            std::cout << "organizations: " << s.organization_rows << " rows, " << s.organizations_skipped
                      << " skipped, " << s.organizations_in_sector << " in sector\n"
                      << "funding rounds: " << s.round_rows << " rows, " << s.rounds_skipped << " skipped, "
                      << s.rounds_dropped << " toward unknown companies\n"
                      << "graph: " << s.companies << " companies, " << s.technologies << " technologies, "
                      << s.edges << " edges, " << s.investors << " investors\n"
                      << "written to " << config.output_dir.string() << "\n";
        } else if (*rank_cmd) {
            const techrank::RunConfig config = resolve_config(rank_opts);
            const auto report = techrank::cmd_rank(config, trajectory);
            print_top("companies", report.companies, 5);
            print_top("technologies", report.technologies, 5);
            std::cout << "written to " << config.output_dir.string() << "\n";
            if (strict && (!report.companies.converged || !report.technologies.converged)) return kExitNotConverged;
        } else if (*compare_cmd) {
            const auto ours = read_ranking(ours_path);
            const auto external = read_external(external_path);
            const auto result = techrank::cmd_compare(ours, external);
            std::cout << "spearman_rho=" << result.rho << " overlap=" << result.overlap << "\n";
        } else if (*bench_cmd) {
            const techrank::RunConfig config = resolve_config(bench_opts);
            const auto rows = techrank::cmd_bench(config, sizes);
            std::filesystem::create_directories(config.output_dir);
            const auto path = config.output_dir / "bench.csv";
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) throw techrank::ConfigError("cannot write '" + path.string() + "'");
            techrank::write_bench_csv(out, rows);
            techrank::write_bench_csv(std::cout, rows);
        }
    } catch (const techrank::Error& e) {
        std::cerr << "techrank: " << e.what() << "\n";
        return e.category() == techrank::Error::Category::Config ? kExitConfig : kExitData;
    } catch (const std::exception& e) {
        std::cerr << "techrank: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
