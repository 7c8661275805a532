#include "techrank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "techrank/error.hpp"

namespace techrank {

std::vector<double> normalize_minmax(std::span<const double> values) {
    std::vector<double> out(values.size(), 0.0);
    if (values.empty()) return out;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double range = *hi - *lo;
    if (!(range > 0.0)) return out;
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - *lo) / range;
    return out;
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        // positions i..j-1 (0-based) share the mean 1-based rank
        const double mean_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mean_rank;
        i = j;
    }
    return ranks;
}

std::vector<std::size_t> competition_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<std::size_t> ranks(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && values[order[k]] == values[order[k - 1]]) {
            ranks[order[k]] = ranks[order[k - 1]];
        } else {
            ranks[order[k]] = k + 1;
        }
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw CorrelationError("spearman: vectors differ in length");
    if (x.size() < 2) throw CorrelationError("spearman: need at least two observations");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw CorrelationError("spearman: non-finite observation");
    }
    const auto rx = fractional_ranks(x);
    const auto ry = fractional_ranks(y);
    const double n = static_cast<double>(rx.size());
    // Mean of 1..n is exact for fractional ranks, ties included.
    const double mean = 0.5 * (n + 1.0);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw CorrelationError("spearman: undefined for a constant vector");
    // Written so that identical or exactly reversed rank vectors give +-1
    // without rounding.
    const double rho = (sxy / sxx) * std::sqrt(sxx / syy);
    return std::clamp(rho, -1.0, 1.0);
}

}  // namespace techrank
