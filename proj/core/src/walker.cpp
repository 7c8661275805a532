#include "techrank/walker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "techrank/error.hpp"
#include "techrank/stats.hpp"

namespace techrank {

namespace {

// k^-exponent for each degree, via exp(-exponent * log k).
std::vector<double> degree_powers(const std::vector<std::size_t>& degree, double exponent, const char* label) {
    std::vector<double> out(degree.size());
    for (std::size_t i = 0; i < degree.size(); ++i) {
        const double v = std::exp(-exponent * std::log(static_cast<double>(degree[i])));
        if (!std::isfinite(v) || v <= 0.0) {
            throw ParameterRangeError(std::string("degree power out of range for ") + label + "=" +
                                      std::to_string(exponent));
        }
        out[i] = v;
    }
    return out;
}

void check_normalizer(double sum, const char* label, double exponent) {
    if (!std::isfinite(sum) || sum <= 0.0) {
        throw ParameterRangeError(std::string("transition normalizer out of range for ") + label + "=" +
                                  std::to_string(exponent));
    }
}

}  // namespace

void WalkerParams::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) throw ConfigError("alpha and beta must be finite");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ConfigError("tolerance must be positive");
    if (max_iterations == 0) throw ConfigError("max_iterations must be at least 1");
}

WalkerState init_weights(const BipartiteGraph& graph) {
    const Degrees d = degrees(graph);
    WalkerState state;
    state.companies.assign(d.companies.begin(), d.companies.end());
    state.technologies.assign(d.technologies.begin(), d.technologies.end());
    return state;
}

TransitionMatrices transition_matrices(const BipartiteGraph& graph, double alpha, double beta) {
    const Degrees d = degrees(graph);
    const auto company_power = degree_powers(d.companies, beta, "beta");
    const auto technology_power = degree_powers(d.technologies, alpha, "alpha");

    TransitionMatrices tm;
    tm.alpha = alpha;
    tm.beta = beta;
    tm.to_company.resize(graph.edge_count());
    tm.to_technology.resize(graph.edge_count());

    for (EntityId t = 0; t < graph.n_technologies(); ++t) {
        const auto companies = graph.companies_of(t);
        const auto edges = graph.column_edges(t);
        double sum = 0.0;
        for (EntityId c : companies) sum += company_power[c];
        check_normalizer(sum, "beta", beta);
        for (std::size_t k = 0; k < edges.size(); ++k) tm.to_company[edges[k]] = company_power[companies[k]] / sum;
    }

    for (EntityId c = 0; c < graph.n_companies(); ++c) {
        double sum = 0.0;
        for (std::size_t e = graph.row_begin(c); e < graph.row_end(c); ++e)
            sum += technology_power[graph.edge_technology(e)];
        check_normalizer(sum, "alpha", alpha);
        for (std::size_t e = graph.row_begin(c); e < graph.row_end(c); ++e)
            tm.to_technology[e] = technology_power[graph.edge_technology(e)] / sum;
    }
    return tm;
}

WalkerState step(const BipartiteGraph& graph, const TransitionMatrices& tm, const WalkerState& state) {
    WalkerState next;
    next.iterations = state.iterations;
    next.iterations_companies = state.iterations_companies;
    next.iterations_technologies = state.iterations_technologies;
    next.converged = state.converged;
    next.trajectory = state.trajectory;
    next.companies.assign(graph.n_companies(), 0.0);
    next.technologies.assign(graph.n_technologies(), 0.0);

    for (EntityId c = 0; c < graph.n_companies(); ++c) {
        double acc = 0.0;
        for (std::size_t e = graph.row_begin(c); e < graph.row_end(c); ++e) {
            const EntityId t = graph.edge_technology(e);
            acc += tm.to_company[e] * state.technologies[t];
            next.technologies[t] += tm.to_technology[e] * state.companies[c];
        }
        next.companies[c] = acc;
    }
    return next;
}

double normalized_change(const std::vector<double>& a, const std::vector<double>& b) {
    const auto na = normalize_minmax(a);
    const auto nb = normalize_minmax(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < na.size(); ++i) worst = std::max(worst, std::abs(na[i] - nb[i]));
    return worst;
}

WalkerState run(const BipartiteGraph& graph, const WalkerParams& params) {
    params.validate();
    const TransitionMatrices tm = transition_matrices(graph, params.alpha, params.beta);

    WalkerState state = init_weights(graph);
    std::vector<TrajectoryPoint> trajectory;
    if (params.record_trajectory) {
        trajectory.push_back({normalize_minmax(state.companies), normalize_minmax(state.technologies)});
    }

    bool companies_met = false;
    bool technologies_met = false;
    for (std::size_t n = 1; n <= params.max_iterations; ++n) {
        WalkerState next = step(graph, tm, state);
        const double dc = normalized_change(next.companies, state.companies);
        const double dt = normalized_change(next.technologies, state.technologies);
        next.iterations = n;
        if (params.record_trajectory) {
            trajectory.push_back({normalize_minmax(next.companies), normalize_minmax(next.technologies)});
        }
        if (!companies_met && dc < params.tolerance) {
            companies_met = true;
            next.iterations_companies = n;
        }
        if (!technologies_met && dt < params.tolerance) {
            technologies_met = true;
            next.iterations_technologies = n;
        }
        state = std::move(next);
        if (dc < params.tolerance && dt < params.tolerance) {
            state.converged = true;
            break;
        }
    }
    if (!companies_met) state.iterations_companies = state.iterations;
    if (!technologies_met) state.iterations_technologies = state.iterations;
    state.trajectory = std::move(trajectory);
    return state;
}

}  // namespace techrank
