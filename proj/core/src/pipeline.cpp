#include "techrank/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include <json.hpp>

#include "techrank/csv.hpp"
#include "techrank/error.hpp"
#include "techrank/stats.hpp"

namespace techrank {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <typename Fn>
auto in_phase(const char* phase, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.category(), std::string(phase) + ": " + e.what());
    }
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : base / path;
}

char single_char(const json& j, const char* key) {
    const auto s = j.get<std::string>();
    if (s.size() != 1) throw ConfigError(std::string(key) + " must be a single character");
    return s[0];
}

PreferenceProfile parse_profile(const json& j, Layer layer) {
    if (!j.is_array()) throw ConfigError(std::string("preferences.") + layer_name(layer) + " must be an array");
    PreferenceProfile profile{layer, {}};
    for (const auto& entry : j) {
        profile.entries.push_back({entry.at("feature").get<std::string>(), entry.at("weight").get<double>()});
    }
    return profile;
}

void check_features(const PreferenceProfile& profile) {
    for (const auto& e : profile.entries) {
        const bool known = e.feature == kInvestmentFeature ||
                           (profile.target == Layer::Companies && e.feature == kLocationFeature);
        if (!known) {
            throw ConfigError("unknown " + std::string(layer_name(profile.target)) + " feature '" + e.feature + "'");
        }
    }
}

bool wants(const PreferenceProfile& profile, const char* feature) {
    return std::any_of(profile.entries.begin(), profile.entries.end(),
                       [&](const PreferenceEntry& e) { return e.feature == feature; });
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    // Rejection sampling keeps the draw uniform and independent of the
    // standard library's distribution implementation.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

json summary_json(const IngestSummary& s) {
    return json{{"organization_rows", s.organization_rows},
                {"organizations_skipped", s.organizations_skipped},
                {"organizations_in_sector", s.organizations_in_sector},
                {"organizations_without_categories", s.organizations_without_categories},
                {"round_rows", s.round_rows},
                {"rounds_skipped", s.rounds_skipped},
                {"rounds_dropped", s.rounds_dropped},
                {"companies", s.companies},
                {"technologies", s.technologies},
                {"investors", s.investors},
                {"edges", s.edges}};
}

json layer_json(const LayerReport& r) {
    return json{{"alpha", r.alpha},
                {"beta", r.beta},
                {"rho", r.rho},
                {"grid_missing", r.grid_missing},
                {"iterations", r.iterations},
                {"iterations_companies", r.iterations_companies},
                {"iterations_technologies", r.iterations_technologies},
                {"converged", r.converged}};
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

void write_json(const fs::path& path, const json& j) {
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

struct LayerFeatures {
    std::vector<FeatureVector> companies;
    std::vector<FeatureVector> technologies;
    std::vector<std::string> unlocated;
};

LayerFeatures build_features(const RunConfig& config, const BipartiteGraph& graph,
                             const InvestmentGraph& investments,
                             const std::unordered_map<std::string, GeoPoint>& locations) {
    LayerFeatures f;
    for (const auto& e : config.company_preferences.entries) {
        if (e.feature == kInvestmentFeature) {
            f.companies.push_back(investment_factor_companies(investments));
        } else if (e.feature == kLocationFeature) {
            auto loc = location_factor(graph.companies(), locations, *config.investor_location);
            f.companies.push_back(std::move(loc.feature));
            f.unlocated = std::move(loc.missing);
        }
    }
    for (const auto& e : config.technology_preferences.entries) {
        if (e.feature == kInvestmentFeature) f.technologies.push_back(investment_factor_technologies(investments, graph));
    }
    return f;
}

}  // namespace

void RunConfig::validate() const {
    if (organizations.empty() || !fs::is_regular_file(organizations))
        throw ConfigError("organizations file not found: '" + organizations.string() + "'");
    if (funding_rounds.empty() || !fs::is_regular_file(funding_rounds))
        throw ConfigError("funding rounds file not found: '" + funding_rounds.string() + "'");
    if (locations && !fs::is_regular_file(*locations))
        throw ConfigError("locations file not found: '" + locations->string() + "'");
    if (sector) sector->validate();
    company_preferences.validate();
    technology_preferences.validate();
    if (company_preferences.target != Layer::Companies || technology_preferences.target != Layer::Technologies)
        throw ConfigError("preference profile attached to the wrong layer");
    check_features(company_preferences);
    check_features(technology_preferences);
    if (wants(company_preferences, kLocationFeature) && !investor_location)
        throw ConfigError("the location feature needs investor_location");
    grid.validate();
    walker.validate();
}

RunConfig parse_run_config(std::istream& in, const fs::path& base_dir) {
    RunConfig config;
    try {
        const json j = json::parse(in);
        config.organizations = resolve(base_dir, j.at("organizations").get<std::string>());
        config.funding_rounds = resolve(base_dir, j.at("funding_rounds").get<std::string>());
        if (j.contains("locations")) config.locations = resolve(base_dir, j["locations"].get<std::string>());

        if (j.contains("organization_columns")) {
            const auto& c = j["organization_columns"];
            auto& s = config.organization_schema;
            s.id = c.value("id", s.id);
            s.name = c.value("name", s.name);
            s.description = c.value("description", s.description);
            s.categories = c.value("categories", s.categories);
            s.latitude = c.value("latitude", s.latitude);
            s.longitude = c.value("longitude", s.longitude);
            s.country = c.value("country", s.country);
            if (c.contains("delimiter")) s.delimiter = single_char(c["delimiter"], "delimiter");
            if (c.contains("category_delimiter"))
                s.category_delimiter = single_char(c["category_delimiter"], "category_delimiter");
        }
        if (j.contains("funding_round_columns")) {
            const auto& c = j["funding_round_columns"];
            auto& s = config.funding_round_schema;
            s.round_id = c.value("round_id", s.round_id);
            s.investor_id = c.value("investor_id", s.investor_id);
            s.company_id = c.value("company_id", s.company_id);
            s.amount = c.value("amount", s.amount);
            s.announced_on = c.value("announced_on", s.announced_on);
            if (c.contains("delimiter")) s.delimiter = single_char(c["delimiter"], "delimiter");
        }

        if (j.contains("sector")) {
            const auto& s = j["sector"];
            SectorFilter filter;
            filter.min_matches = s.value("min_matches", std::size_t{2});
            if (s.contains("preset")) {
                const auto preset = s["preset"].get<std::string>();
                if (preset == "cybersecurity") {
                    filter.keywords = cybersecurity_keywords();
                } else if (preset == "medical") {
                    filter.keywords = medical_keywords();
                } else {
                    throw ConfigError("unknown sector preset '" + preset + "'");
                }
            }
            if (s.contains("keywords_file")) {
                const fs::path path = resolve(base_dir, s["keywords_file"].get<std::string>());
                if (!fs::is_regular_file(path)) throw ConfigError("keywords file not found: '" + path.string() + "'");
                auto words = load_keywords(path.string());
                filter.keywords.insert(words.begin(), words.end());
            }
            if (s.contains("keywords")) {
                for (const auto& w : s["keywords"]) filter.keywords.insert(EntityRegistry::normalize(w.get<std::string>()));
            }
            config.sector = std::move(filter);
        }

        if (j.contains("preferences")) {
            const auto& p = j["preferences"];
            if (p.contains("companies")) config.company_preferences = parse_profile(p["companies"], Layer::Companies);
            if (p.contains("technologies"))
                config.technology_preferences = parse_profile(p["technologies"], Layer::Technologies);
        }
        if (j.contains("investor_location")) {
            const auto& loc = j["investor_location"];
            config.investor_location =
                GeoPoint::make(loc.at("latitude").get<double>(), loc.at("longitude").get<double>());
        }
        if (j.contains("grid")) {
            const auto& g = j["grid"];
            if (g.is_string()) {
                config.grid = GridSpec::parse(g.get<std::string>());
            } else {
                config.grid.alpha_min = g.value("alpha_min", config.grid.alpha_min);
                config.grid.alpha_max = g.value("alpha_max", config.grid.alpha_max);
                config.grid.beta_min = g.value("beta_min", config.grid.beta_min);
                config.grid.beta_max = g.value("beta_max", config.grid.beta_max);
                config.grid.step = g.value("step", config.grid.step);
            }
        }
        if (j.contains("walker")) {
            const auto& w = j["walker"];
            config.walker.tolerance = w.value("tolerance", config.walker.tolerance);
            config.walker.max_iterations = w.value("max_iterations", config.walker.max_iterations);
        }
        if (j.contains("output_dir")) config.output_dir = resolve(base_dir, j["output_dir"].get<std::string>());
        config.seed = j.value("seed", config.seed);
        config.subset = j.value("subset", config.subset);
        config.threads = j.value("threads", config.threads);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return config;
}

RunConfig load_run_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    return parse_run_config(in, path.parent_path());
}

LayerReport make_layer_report(const BipartiteGraph& graph, Layer layer, const WalkerState& state,
                              const std::unordered_map<std::string, std::string>& display_names) {
    const bool companies = layer == Layer::Companies;
    const auto& registry = companies ? graph.companies() : graph.technologies();
    const auto& raw = companies ? state.companies : state.technologies;
    const Degrees d = degrees(graph);
    const auto& degree = companies ? d.companies : d.technologies;

    const auto weights = normalize_minmax(raw);
    const auto ranks = competition_ranks(weights);
    const std::vector<double> degree_values(degree.begin(), degree.end());
    const auto degree_ranks = competition_ranks(degree_values);

    LayerReport report;
    report.layer = layer;
    report.iterations = state.iterations;
    report.iterations_companies = state.iterations_companies;
    report.iterations_technologies = state.iterations_technologies;
    report.converged = state.converged;
    report.entities.reserve(registry.size());
    for (EntityId i = 0; i < registry.size(); ++i) {
        RankedEntity e;
        e.id = registry.name(i);
        auto it = display_names.find(e.id);
        e.name = it != display_names.end() ? it->second : e.id;
        e.weight = weights[i];
        e.rank = ranks[i];
        e.degree = degree[i];
        e.degree_rank = degree_ranks[i];
        e.rank_delta = static_cast<long>(e.degree_rank) - static_cast<long>(e.rank);
        report.entities.push_back(std::move(e));
    }
    std::stable_sort(report.entities.begin(), report.entities.end(),
                     [](const RankedEntity& a, const RankedEntity& b) { return a.rank < b.rank; });
    return report;
}

void write_ranking_csv(std::ostream& out, const LayerReport& report) {
    csv::write_row(out, {"id", "name", "rank", "weight", "degree", "degree_rank", "rank_delta"});
    for (const auto& e : report.entities) {
        csv::write_row(out, {e.id, e.name, std::to_string(e.rank), csv::format_double(e.weight),
                             std::to_string(e.degree), std::to_string(e.degree_rank), std::to_string(e.rank_delta)});
    }
}

std::vector<RankedEntity> read_ranking_csv(std::istream& in) {
    const csv::Table table = csv::read_table(in);
    const char* names[] = {"id", "name", "rank", "weight", "degree", "degree_rank", "rank_delta"};
    std::size_t col[7];
    for (int k = 0; k < 7; ++k) {
        const auto c = table.column(names[k]);
        if (!c) throw ParseError(std::string("ranking: missing column '") + names[k] + "'");
        col[k] = *c;
    }
    std::vector<RankedEntity> out;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& f = table.rows[r];
        if (f.size() != table.header.size())
            throw ParseError("ranking: wrong field count on line " + std::to_string(table.row_lines[r]));
        auto number = [&](std::size_t k) {
            const auto v = csv::parse_double(f[col[k]]);
            if (!v) throw ParseError("ranking: bad " + std::string(names[k]) + " on line " +
                                     std::to_string(table.row_lines[r]));
            return *v;
        };
        RankedEntity e;
        e.id = f[col[0]];
        e.name = f[col[1]];
        e.rank = static_cast<std::size_t>(number(2));
        e.weight = number(3);
        e.degree = static_cast<std::size_t>(number(4));
        e.degree_rank = static_cast<std::size_t>(number(5));
        e.rank_delta = static_cast<long>(number(6));
        out.push_back(std::move(e));
    }
    return out;
}

Ingested ingest(const RunConfig& config) {
    return in_phase("ingest", [&] {
        const auto orgs = load_organizations(config.organizations.string(), config.organization_schema);
        const auto rounds = load_funding_rounds(config.funding_rounds.string(), config.funding_round_schema);
        std::vector<OrganizationRecord> kept =
            config.sector ? filter_sector(orgs.records, *config.sector) : orgs.records;

        GraphBundle bundle = build_graphs(kept, rounds.records);
        if (config.locations) {
            for (auto& [id, point] : load_locations(config.locations->string())) bundle.locations[id] = point;
        }
        IngestSummary s;
        s.organization_rows = orgs.rows;
        s.organizations_skipped = orgs.skipped;
        s.organizations_in_sector = kept.size();
        s.organizations_without_categories = bundle.organizations_without_categories;
        s.round_rows = rounds.rows;
        s.rounds_skipped = rounds.skipped;
        s.rounds_dropped = bundle.rounds_dropped;
        s.companies = bundle.technologies.n_companies();
        s.technologies = bundle.technologies.n_technologies();
        s.investors = bundle.investments.investors().size();
        s.edges = bundle.technologies.edge_count();
        return Ingested{std::move(bundle), s};
    });
}

Ingested cmd_ingest(const RunConfig& config) {
    config.validate();
    Ingested result = ingest(config);
    fs::create_directories(config.output_dir);
    {
        auto out = open_output(config.output_dir / "bipartite.csv");
        csv::write_row(out, {"company_id", "technology"});
        for (const auto& [company, technology] : result.graphs.technologies.pairs()) csv::write_row(out, {company, technology});
    }
    {
        auto out = open_output(config.output_dir / "investments.csv");
        csv::write_row(out, {"investor_id", "company_id", "amount"});
        const auto& ig = result.graphs.investments;
        for (const auto& e : ig.edges()) {
            csv::write_row(out, {ig.investors().name(e.investor), ig.companies().name(e.company),
                                 csv::format_double(e.amount)});
        }
    }
    write_json(config.output_dir / "ingest.json", summary_json(result.summary));
    return result;
}

std::vector<EntityId> sample_companies(std::size_t total, std::size_t count, std::uint64_t seed) {
    if (count > total) {
        throw ConfigError("cannot sample " + std::to_string(count) + " companies out of " + std::to_string(total));
    }
    std::vector<EntityId> perm(total);
    for (std::size_t i = 0; i < total; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = total; i > 1; --i) std::swap(perm[i - 1], perm[bounded(rng, i)]);
    perm.resize(count);
    std::sort(perm.begin(), perm.end());
    return perm;
}

RankingReport rank_graphs(const RunConfig& config, const BipartiteGraph& graph, const InvestmentGraph& investments,
                          const std::unordered_map<std::string, GeoPoint>& locations,
                          const std::unordered_map<std::string, std::string>& display_names) {
    RankingReport report;

    Stopwatch factors_clock;
    const auto [truth_c, truth_t] = in_phase("factors", [&] {
        LayerFeatures f = build_features(config, graph, investments, locations);
        report.unlocated_companies = std::move(f.unlocated);
        return std::pair{compose_ground_truth(config.company_preferences, f.companies),
                         compose_ground_truth(config.technology_preferences, f.technologies)};
    });
    report.timings.factors_seconds = factors_clock.seconds();

    Stopwatch calib_c;
    report.company_calibration = in_phase("calibration (companies)", [&] {
        return calibrate(graph, truth_c, Layer::Companies, config.grid, config.walker, config.threads);
    });
    report.timings.calibration_companies_seconds = calib_c.seconds();
    Stopwatch calib_t;
    report.technology_calibration = in_phase("calibration (technologies)", [&] {
        return calibrate(graph, truth_t, Layer::Technologies, config.grid, config.walker, config.threads);
    });
    report.timings.calibration_technologies_seconds = calib_t.seconds();

    auto walk = [&](const CalibrationResult& calibration, Layer layer, double& seconds) {
        Stopwatch clock;
        WalkerParams params = config.walker;
        params.alpha = calibration.alpha_star;
        params.beta = calibration.beta_star;
        WalkerState state = in_phase("walker", [&] { return run(graph, params); });
        seconds = clock.seconds();
        LayerReport layer_report = make_layer_report(graph, layer, state, display_names);
        layer_report.alpha = calibration.alpha_star;
        layer_report.beta = calibration.beta_star;
        layer_report.rho = calibration.rho_star;
        layer_report.grid_missing = calibration.missing_points();
        return std::pair{std::move(layer_report), std::move(state.trajectory)};
    };
    std::tie(report.companies, report.company_trajectory) =
        walk(report.company_calibration, Layer::Companies, report.timings.walk_companies_seconds);
    std::tie(report.technologies, report.technology_trajectory) =
        walk(report.technology_calibration, Layer::Technologies, report.timings.walk_technologies_seconds);
    return report;
}

RankingReport cmd_rank(const RunConfig& config, bool trajectory) {
    config.validate();
    Stopwatch ingest_clock;
    Ingested data = ingest(config);
    std::optional<BipartiteGraph> subgraph;
    std::optional<InvestmentGraph> subinvest;
    if (config.subset > 0 && config.subset < data.graphs.technologies.n_companies()) {
        const auto chosen = in_phase("subset", [&] {
            return sample_companies(data.graphs.technologies.n_companies(), config.subset, config.seed);
        });
        subgraph.emplace(induced_subgraph(data.graphs.technologies, chosen));
        subinvest.emplace(data.graphs.investments.realign(subgraph->companies()));
    }
    const BipartiteGraph& graph = subgraph ? *subgraph : data.graphs.technologies;
    const InvestmentGraph& investments = subinvest ? *subinvest : data.graphs.investments;
    const double ingest_seconds = ingest_clock.seconds();

    RunConfig effective = config;
    effective.walker.record_trajectory = trajectory;
    RankingReport report = rank_graphs(effective, graph, investments, data.graphs.locations, data.graphs.display_names);
    report.summary = data.summary;
    report.timings.ingest_seconds = ingest_seconds;

    const fs::path& dir = config.output_dir;
    fs::create_directories(dir);
    {
        auto out = open_output(dir / "companies.csv");
        write_ranking_csv(out, report.companies);
    }
    {
        auto out = open_output(dir / "technologies.csv");
        write_ranking_csv(out, report.technologies);
    }
    {
        auto out = open_output(dir / "surface.csv");
        const CalibrationResult both[] = {report.company_calibration, report.technology_calibration};
        write_surface_csv(out, both);
    }
    if (trajectory) {
        auto out = open_output(dir / "trajectory.csv");
        csv::write_row(out, {"layer", "iteration", "id", "weight"});
        for (std::size_t n = 0; n < report.company_trajectory.size(); ++n) {
            const auto& w = report.company_trajectory[n].companies;
            for (EntityId c = 0; c < w.size(); ++c)
                csv::write_row(out, {"companies", std::to_string(n), graph.companies().name(c), csv::format_double(w[c])});
        }
        for (std::size_t n = 0; n < report.technology_trajectory.size(); ++n) {
            const auto& w = report.technology_trajectory[n].technologies;
            for (EntityId t = 0; t < w.size(); ++t)
                csv::write_row(out, {"technologies", std::to_string(n), graph.technologies().name(t),
                                     csv::format_double(w[t])});
        }
    }
    json run_json{{"seed", config.seed},
                  {"subset", config.subset},
                  {"ranked_companies", graph.n_companies()},
                  {"ranked_technologies", graph.n_technologies()},
                  {"grid",
                   {{"alpha_min", config.grid.alpha_min},
                    {"alpha_max", config.grid.alpha_max},
                    {"beta_min", config.grid.beta_min},
                    {"beta_max", config.grid.beta_max},
                    {"step", config.grid.step}}},
                  {"walker", {{"tolerance", config.walker.tolerance}, {"max_iterations", config.walker.max_iterations}}},
                  {"ingest", summary_json(report.summary)},
                  {"companies", layer_json(report.companies)},
                  {"technologies", layer_json(report.technologies)},
                  {"companies_without_location", report.unlocated_companies}};
    write_json(dir / "run.json", run_json);
    const auto& t = report.timings;
    write_json(dir / "timings.json", json{{"ingest_seconds", t.ingest_seconds},
                                          {"factors_seconds", t.factors_seconds},
                                          {"calibration_companies_seconds", t.calibration_companies_seconds},
                                          {"calibration_technologies_seconds", t.calibration_technologies_seconds},
                                          {"walk_companies_seconds", t.walk_companies_seconds},
                                          {"walk_technologies_seconds", t.walk_technologies_seconds}});
    return report;
}

std::vector<ExternalRank> read_external_ranks(std::istream& in) {
    const csv::Table table = csv::read_table(in);
    const auto id = table.column("id");
    const auto rank = table.column("rank");
    if (!id || !rank) throw ParseError("external ranking needs id and rank columns");
    std::vector<ExternalRank> out;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& f = table.rows[r];
        const auto v = *rank < f.size() ? csv::parse_double(f[*rank]) : std::nullopt;
        if (*id >= f.size() || !v) throw ParseError("external ranking: bad row on line " + std::to_string(table.row_lines[r]));
        out.push_back({f[*id], *v});
    }
    return out;
}

Comparison cmd_compare(std::span<const RankedEntity> ours, std::span<const ExternalRank> external) {
    std::vector<double> weights;
    weights.reserve(ours.size());
    for (const auto& e : ours) weights.push_back(e.weight);
    const auto our_ranks = competition_ranks(weights);

    std::unordered_map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < ours.size(); ++i) position.emplace(EntityRegistry::normalize(ours[i].id), i);

    std::unordered_map<std::string, bool> seen;
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& e : external) {
        const std::string key = EntityRegistry::normalize(e.id);
        if (!seen.emplace(key, true).second) throw ParseError("external ranking lists '" + e.id + "' twice");
        auto it = position.find(key);
        if (it == position.end()) continue;
        x.push_back(static_cast<double>(our_ranks[it->second]));
        y.push_back(e.rank);
    }
    if (x.size() < 2) {
        throw CorrelationError("rankings share " + std::to_string(x.size()) + " identifiers, need at least 2");
    }
    return Comparison{spearman(x, y), x.size()};
}

std::vector<BenchRow> cmd_bench(const RunConfig& config, std::span<const std::size_t> sizes) {
    config.validate();
    const Ingested data = ingest(config);
    const auto& full = data.graphs.technologies;
    std::vector<BenchRow> rows;
    for (std::size_t size : sizes) {
        const auto chosen = in_phase("bench", [&] { return sample_companies(full.n_companies(), size, config.seed); });
        const BipartiteGraph graph = induced_subgraph(full, chosen);
        const InvestmentGraph investments = data.graphs.investments.realign(graph.companies());
        const RankingReport report =
            rank_graphs(config, graph, investments, data.graphs.locations, data.graphs.display_names);
        BenchRow row;
        row.n_companies = graph.n_companies();
        row.n_technologies = graph.n_technologies();
        row.calib_seconds =
            report.timings.calibration_companies_seconds + report.timings.calibration_technologies_seconds;
        row.walk_seconds = report.timings.walk_companies_seconds + report.timings.walk_technologies_seconds;
        row.iterations_c = report.companies.iterations_companies;
        row.iterations_t = report.technologies.iterations_technologies;
        rows.push_back(row);
    }
    return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
    csv::write_row(out, {"n_companies", "n_technologies", "calib_seconds", "walk_seconds", "iterations_c",
                         "iterations_t"});
    for (const auto& r : rows) {
        csv::write_row(out, {std::to_string(r.n_companies), std::to_string(r.n_technologies),
                             csv::format_double(r.calib_seconds), csv::format_double(r.walk_seconds),
                             std::to_string(r.iterations_c), std::to_string(r.iterations_t)});
    }
}

}  // namespace techrank
