#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "techrank/calibration.hpp"
#include "techrank/factors.hpp"
#include "techrank/ingestion.hpp"
#include "techrank/walker.hpp"

namespace techrank {

/**
 * Everything one command needs, usually read from a JSON file.
 *
 *     {
 *       "organizations": "organizations.csv",
 *       "funding_rounds": "funding_rounds.csv",
 *       "locations": "locations.csv",
 *       "sector": {"preset": "cybersecurity", "min_matches": 2},
 *       "preferences": {
 *         "companies": [{"feature": "previous_investments", "weight": 0.8},
 *                       {"feature": "location", "weight": 0.2}],
 *         "technologies": [{"feature": "previous_investments", "weight": 1.0}]
 *       },
 *       "investor_location": {"latitude": 40.71, "longitude": -74.01},
 *       "grid": "-2,2,-2,2,0.04",
 *       "walker": {"tolerance": 1e-8, "max_iterations": 5000},
 *       "output_dir": "out",
 *       "seed": 42,
 *       "subset": 0
 *     }
 *
 * Relative paths are resolved against the directory holding the file.
 */
struct RunConfig {
    std::filesystem::path organizations;
    std::filesystem::path funding_rounds;
    std::optional<std::filesystem::path> locations;
    OrganizationSchema organization_schema;
    FundingRoundSchema funding_round_schema;
    /// Absent means every organization is kept.
    std::optional<SectorFilter> sector;
    PreferenceProfile company_preferences{Layer::Companies, {{kInvestmentFeature, 1.0}}};
    PreferenceProfile technology_preferences{Layer::Technologies, {{kInvestmentFeature, 1.0}}};
    std::optional<GeoPoint> investor_location;
    GridSpec grid;
    WalkerParams walker;
    std::filesystem::path output_dir = "techrank-out";
    std::uint64_t seed = 0;
    /// Number of companies to sample; 0 keeps all.
    std::size_t subset = 0;
    unsigned threads = 0;

    /// Throws ConfigError when a referenced file is missing, a profile is
    /// invalid, a feature is unknown for its layer, or the location feature
    /// is requested without an investor location.
    void validate() const;
};

RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir);

struct RankedEntity {
    std::string id;
    std::string name;
    double weight = 0.0;  ///< min-max normalized final weight
    std::size_t rank = 0;
    std::size_t degree = 0;
    std::size_t degree_rank = 0;
    /// degree_rank - rank: positive when the walker moved the entity up.
    long rank_delta = 0;
};

struct LayerReport {
    Layer layer = Layer::Companies;
    double alpha = 0.0;
    double beta = 0.0;
    double rho = 0.0;
    std::size_t grid_missing = 0;
    std::size_t iterations = 0;
    std::size_t iterations_companies = 0;
    std::size_t iterations_technologies = 0;
    bool converged = false;
    /// Ordered by rank, ties in registry order.
    std::vector<RankedEntity> entities;
};

/// Builds the ranked rows of one layer from a finished walk.
LayerReport make_layer_report(const BipartiteGraph& graph, Layer layer, const WalkerState& state,
                              const std::unordered_map<std::string, std::string>& display_names);

void write_ranking_csv(std::ostream& out, const LayerReport& report);
std::vector<RankedEntity> read_ranking_csv(std::istream& in);

struct IngestSummary {
    std::size_t organization_rows = 0;
    std::size_t organizations_skipped = 0;
    std::size_t organizations_in_sector = 0;
    std::size_t organizations_without_categories = 0;
    std::size_t round_rows = 0;
    std::size_t rounds_skipped = 0;
    std::size_t rounds_dropped = 0;
    std::size_t companies = 0;
    std::size_t technologies = 0;
    std::size_t investors = 0;
    std::size_t edges = 0;
};

struct Ingested {
    GraphBundle graphs;
    IngestSummary summary;
};

/// Load, sector-filter and build both graphs; location-file entries are
/// merged over coordinates from the organization records.
Ingested ingest(const RunConfig& config);

/// Writes bipartite.csv, investments.csv and ingest.json.
Ingested cmd_ingest(const RunConfig& config);

/// Company ids of a seeded uniform sample of size `count` out of `total`,
/// ascending. Samples for the same seed are nested: a smaller count always
/// yields a subset of a larger one.
std::vector<EntityId> sample_companies(std::size_t total, std::size_t count, std::uint64_t seed);

struct PhaseTimings {
    double ingest_seconds = 0.0;
    double factors_seconds = 0.0;
    double calibration_companies_seconds = 0.0;
    double calibration_technologies_seconds = 0.0;
    double walk_companies_seconds = 0.0;
    double walk_technologies_seconds = 0.0;
};

struct RankingReport {
    IngestSummary summary;
    LayerReport companies;
    LayerReport technologies;
    CalibrationResult company_calibration;
    CalibrationResult technology_calibration;
    /// Companies scored 0 on the location feature for lack of coordinates.
    std::vector<std::string> unlocated_companies;
    /// Present when the walker trajectory was requested.
    std::vector<TrajectoryPoint> company_trajectory;
    std::vector<TrajectoryPoint> technology_trajectory;
    PhaseTimings timings;
};

/// Calibrates each layer against its preference profile and walks at the
/// optimum. Exposed separately so benchmarks and tests can skip file I/O.
RankingReport rank_graphs(const RunConfig& config, const BipartiteGraph& graph, const InvestmentGraph& investments,
                          const std::unordered_map<std::string, GeoPoint>& locations,
                          const std::unordered_map<std::string, std::string>& display_names);

/**
 * The full ranking pipeline. Writes into config.output_dir:
 * companies.csv, technologies.csv, surface.csv, run.json, timings.json and,
 * when the walker trajectory is requested, trajectory.csv. Everything but
 * timings.json is byte-identical across runs with the same inputs.
 */
RankingReport cmd_rank(const RunConfig& config, bool trajectory = false);

struct ExternalRank {
    std::string id;
    double rank = 0.0;
};

/// Reads `id,rank` rows.
std::vector<ExternalRank> read_external_ranks(std::istream& in);

struct Comparison {
    double rho = 0.0;
    std::size_t overlap = 0;
};

/// Spearman correlation between our weight-derived ranks and an external
/// ranking over the identifiers both contain. Throws CorrelationError with
/// fewer than two shared identifiers.
Comparison cmd_compare(std::span<const RankedEntity> ours, std::span<const ExternalRank> external);

struct BenchRow {
    std::size_t n_companies = 0;
    std::size_t n_technologies = 0;
    double calib_seconds = 0.0;
    double walk_seconds = 0.0;
    std::size_t iterations_c = 0;
    std::size_t iterations_t = 0;
};

/// Calibration and walker wall-clock time on nested seeded company samples.
std::vector<BenchRow> cmd_bench(const RunConfig& config, std::span<const std::size_t> sizes);
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace techrank
