#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "techrank/graph.hpp"
#include "techrank/walker.hpp"

namespace techrank {

/// Rectangular (alpha, beta) grid with a shared step.
struct GridSpec {
    double alpha_min = -2.0;
    double alpha_max = 2.0;
    double beta_min = -2.0;
    double beta_max = 2.0;
    double step = 0.04;

    /// Throws ConfigError unless min < max on both axes, step > 0 and the
    /// step divides both ranges to within 1e-9.
    void validate() const;

    std::vector<double> alphas() const;
    std::vector<double> betas() const;

    /// Parses "amin,amax,bmin,bmax,step".
    static GridSpec parse(std::string_view text);
};

struct CalibrationResult {
    Layer target = Layer::Companies;
    double alpha_star = 0.0;
    double beta_star = 0.0;
    double rho_star = 0.0;
    std::vector<double> alphas;
    std::vector<double> betas;
    /// Row-major over (alpha, beta); empty where the walker did not converge
    /// or the correlation was undefined.
    std::vector<std::optional<double>> surface;

    const std::optional<double>& rho_at(std::size_t alpha_index, std::size_t beta_index) const {
        return surface[alpha_index * betas.size() + beta_index];
    }
    std::size_t missing_points() const;
};

/// Spearman correlation between the target layer's final walker weights at
/// (alpha, beta) and `ground_truth`, both min-max normalized. Empty when the
/// walker does not converge, the parameters are out of range, or the
/// walker's output is constant.
std::optional<double> evaluate_grid_point(const BipartiteGraph& graph, std::span<const double> ground_truth,
                                          Layer target, double alpha, double beta,
                                          const WalkerParams& walker_defaults);

/**
 * Grid search for the (alpha, beta) maximizing the Spearman correlation with
 * an exogenous ground truth over one layer.
 *
 * Grid points are evaluated on `threads` workers (0 picks the hardware
 * concurrency). Among points with the highest correlation the winner has the
 * smallest |alpha|, then the smallest |beta|, then the smallest (alpha, beta)
 * lexicographically, so the outcome never depends on evaluation order.
 *
 * Throws CalibrationError when the ground truth has the wrong length or is
 * constant, or when no grid point yields a correlation.
 */
CalibrationResult calibrate(const BipartiteGraph& graph, std::span<const double> ground_truth, Layer target,
                            const GridSpec& grid, const WalkerParams& walker_defaults, unsigned threads = 0);

struct SurfaceRow {
    Layer target = Layer::Companies;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> rho;
};

/// CSV with header `target,alpha,beta,rho`; missing correlations are left empty.
void write_surface_csv(std::ostream& out, std::span<const CalibrationResult> results);
std::vector<SurfaceRow> read_surface_csv(std::istream& in);

}  // namespace techrank
