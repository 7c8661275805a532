#pragma once

#include <cstddef>
#include <vector>

#include "techrank/graph.hpp"

namespace techrank {

struct WalkerParams {
    static constexpr double kDefaultTolerance = 1e-8;
    static constexpr std::size_t kDefaultMaxIterations = 5000;

    double alpha = 0.0;
    double beta = 0.0;
    /// Bound on the largest change of any min-max-normalized weight between
    /// two consecutive iterations.
    double tolerance = kDefaultTolerance;
    std::size_t max_iterations = kDefaultMaxIterations;
    bool record_trajectory = false;

    /// Throws ConfigError if tolerance <= 0, max_iterations == 0, or alpha /
    /// beta are not finite.
    void validate() const;
};

/**
 * Per-edge transition probabilities, stored in the row-storage edge order of
 * the graph they were built from.
 *
 * `to_company[e]` is G_ct for edge e = (c, t): the share of technology t's
 * weight that flows to company c, proportional to k_c^-beta and summing to 1
 * over each technology's companies. `to_technology[e]` is G_tc: proportional
 * to k_t^-alpha and summing to 1 over each company's technologies.
 */
struct TransitionMatrices {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> to_company;
    std::vector<double> to_technology;
};

/// Min-max-normalized weights of both layers at one iteration.
struct TrajectoryPoint {
    std::vector<double> companies;
    std::vector<double> technologies;
};

struct WalkerState {
    std::vector<double> companies;
    std::vector<double> technologies;
    /// Steps taken so far.
    std::size_t iterations = 0;
    /// First iteration at which each layer's normalized change fell below
    /// tolerance; equals `iterations` for a layer that never did.
    std::size_t iterations_companies = 0;
    std::size_t iterations_technologies = 0;
    bool converged = false;
    /// Iteration 0 (the degrees) onwards, when requested.
    std::vector<TrajectoryPoint> trajectory;
};

/// Weights start at the degrees.
WalkerState init_weights(const BipartiteGraph& graph);

/// Throws ParameterRangeError when a degree power or its normalizer is not a
/// positive finite number.
TransitionMatrices transition_matrices(const BipartiteGraph& graph, double alpha, double beta);

/// One synchronous update: both layers are computed from `state`'s weights.
/// Counters and trajectory are carried over unchanged.
WalkerState step(const BipartiteGraph& graph, const TransitionMatrices& tm, const WalkerState& state);

/// Iterates until both layers meet the tolerance or max_iterations is hit.
/// Non-convergence is reported through `converged`, not by throwing.
WalkerState run(const BipartiteGraph& graph, const WalkerParams& params);

/// Largest absolute difference between the min-max normalizations of `a`
/// and `b`.
double normalized_change(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace techrank
