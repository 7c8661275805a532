#include "techrank/calibration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "techrank/csv.hpp"
#include "techrank/error.hpp"
#include "techrank/stats.hpp"

namespace techrank {

namespace {

constexpr double kStepSlack = 1e-9;

std::size_t axis_points(double lo, double hi, double step) {
    return static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
}

// Grid coordinates are snapped to 10 decimals so that e.g. -2 + 24 * 0.04
// prints and compares as -1.04.
std::vector<double> axis_values(double lo, double hi, double step) {
    const std::size_t n = axis_points(lo, hi, step);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::round((lo + static_cast<double>(i) * step) * 1e10) / 1e10;
    }
    return out;
}

void check_axis(double lo, double hi, double step, const char* axis) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw ConfigError(std::string("grid: ") + axis + " range needs min < max");
    const double cells = (hi - lo) / step;
    if (std::abs(cells - std::round(cells)) > kStepSlack)
        throw ConfigError(std::string("grid: step does not divide the ") + axis + " range");
}

// Strict weak "is better than" for calibration candidates.
bool better(double rho_a, double alpha_a, double beta_a, double rho_b, double alpha_b, double beta_b) {
    if (rho_a != rho_b) return rho_a > rho_b;
    if (std::abs(alpha_a) != std::abs(alpha_b)) return std::abs(alpha_a) < std::abs(alpha_b);
    if (std::abs(beta_a) != std::abs(beta_b)) return std::abs(beta_a) < std::abs(beta_b);
    if (alpha_a != alpha_b) return alpha_a < alpha_b;
    return beta_a < beta_b;
}

}  // namespace

void GridSpec::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("grid: step must be positive");
    check_axis(alpha_min, alpha_max, step, "alpha");
    check_axis(beta_min, beta_max, step, "beta");
}

std::vector<double> GridSpec::alphas() const { return axis_values(alpha_min, alpha_max, step); }
std::vector<double> GridSpec::betas() const { return axis_values(beta_min, beta_max, step); }

GridSpec GridSpec::parse(std::string_view text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view token =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto v = csv::parse_double(token);
        if (!v) throw ConfigError("grid: cannot parse '" + std::string(token) + "'");
        values.push_back(*v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (values.size() != 5) throw ConfigError("grid: expected amin,amax,bmin,bmax,step");
    GridSpec grid{values[0], values[1], values[2], values[3], values[4]};
    grid.validate();
    return grid;
}

std::size_t CalibrationResult::missing_points() const {
    return static_cast<std::size_t>(
        std::count_if(surface.begin(), surface.end(), [](const auto& v) { return !v.has_value(); }));
}

std::optional<double> evaluate_grid_point(const BipartiteGraph& graph, std::span<const double> ground_truth,
                                          Layer target, double alpha, double beta,
                                          const WalkerParams& walker_defaults) {
    WalkerParams params = walker_defaults;
    params.alpha = alpha;
    params.beta = beta;
    params.record_trajectory = false;
    WalkerState state;
    try {
        state = run(graph, params);
    } catch (const ParameterRangeError&) {
        return std::nullopt;
    }
    if (!state.converged) return std::nullopt;
    const auto& weights = target == Layer::Companies ? state.companies : state.technologies;
    const auto normalized_weights = normalize_minmax(weights);
    const auto normalized_truth = normalize_minmax(ground_truth);
    try {
        return spearman(normalized_weights, normalized_truth);
    } catch (const CorrelationError&) {
        return std::nullopt;
    }
}

CalibrationResult calibrate(const BipartiteGraph& graph, std::span<const double> ground_truth, Layer target,
                            const GridSpec& grid, const WalkerParams& walker_defaults, unsigned threads) {
    grid.validate();
    walker_defaults.validate();
    const std::size_t layer_size = target == Layer::Companies ? graph.n_companies() : graph.n_technologies();
    if (ground_truth.size() != layer_size) {
        throw CalibrationError("ground truth has " + std::to_string(ground_truth.size()) + " entries, " +
                               layer_name(target) + " layer has " + std::to_string(layer_size));
    }
    if (ground_truth.size() < 2) throw CalibrationError("ground truth needs at least two entries");
    {
        const auto [lo, hi] = std::minmax_element(ground_truth.begin(), ground_truth.end());
        if (!(*lo < *hi)) throw CalibrationError("constant ground truth: correlation is undefined");
    }

    CalibrationResult result;
    result.target = target;
    result.alphas = grid.alphas();
    result.betas = grid.betas();
    const std::size_t total = result.alphas.size() * result.betas.size();
    result.surface.assign(total, std::nullopt);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1, std::memory_order_relaxed);
            if (k >= total) return;
            try {
                result.surface[k] = evaluate_grid_point(graph, ground_truth, target,
                                                        result.alphas[k / result.betas.size()],
                                                        result.betas[k % result.betas.size()], walker_defaults);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(total);
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    bool found = false;
    for (std::size_t k = 0; k < total; ++k) {
        if (!result.surface[k]) continue;
        const double rho = *result.surface[k];
        const double a = result.alphas[k / result.betas.size()];
        const double b = result.betas[k % result.betas.size()];
        if (!found || better(rho, a, b, result.rho_star, result.alpha_star, result.beta_star)) {
            found = true;
            result.rho_star = rho;
            result.alpha_star = a;
            result.beta_star = b;
        }
    }
    if (!found) throw CalibrationError(std::string("no grid point produced a correlation for ") + layer_name(target));
    return result;
}

void write_surface_csv(std::ostream& out, std::span<const CalibrationResult> results) {
    csv::write_row(out, {"target", "alpha", "beta", "rho"});
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.alphas.size(); ++i) {
            for (std::size_t j = 0; j < r.betas.size(); ++j) {
                const auto& rho = r.rho_at(i, j);
                csv::write_row(out, {layer_name(r.target), csv::format_double(r.alphas[i]),
                                     csv::format_double(r.betas[j]), rho ? csv::format_double(*rho) : ""});
            }
        }
    }
}

std::vector<SurfaceRow> read_surface_csv(std::istream& in) {
    const csv::Table table = csv::read_table(in);
    const auto target = table.column("target");
    const auto alpha = table.column("alpha");
    const auto beta = table.column("beta");
    const auto rho = table.column("rho");
    if (!target || !alpha || !beta || !rho) throw ParseError("surface: expected columns target,alpha,beta,rho");
    std::vector<SurfaceRow> rows;
    rows.reserve(table.rows.size());
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& f = table.rows[k];
        if (f.size() != table.header.size())
            throw ParseError("surface: wrong field count on line " + std::to_string(table.row_lines[k]));
        SurfaceRow row;
        if (f[*target] == "companies") {
            row.target = Layer::Companies;
        } else if (f[*target] == "technologies") {
            row.target = Layer::Technologies;
        } else {
            throw ParseError("surface: unknown target '" + f[*target] + "'");
        }
        const auto a = csv::parse_double(f[*alpha]);
        const auto b = csv::parse_double(f[*beta]);
        if (!a || !b) throw ParseError("surface: bad coordinate on line " + std::to_string(table.row_lines[k]));
        row.alpha = *a;
        row.beta = *b;
        if (!f[*rho].empty()) {
            row.rho = csv::parse_double(f[*rho]);
            if (!row.rho) throw ParseError("surface: bad rho on line " + std::to_string(table.row_lines[k]));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace techrank
