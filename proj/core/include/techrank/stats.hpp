#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace techrank {

/// Affine map of `values` onto [0, 1]. A constant vector maps to all zeros.
std::vector<double> normalize_minmax(std::span<const double> values);

/// 1-based ranks, ties receiving the mean of the positions they occupy.
std::vector<double> fractional_ranks(std::span<const double> values);

/// 1-based competition ranks ("1224") of `values` sorted in decreasing
/// order: the largest value gets rank 1 and ties share the smallest rank.
std::vector<std::size_t> competition_ranks(std::span<const double> values);

/// Spearman rank correlation: Pearson correlation of the fractional ranks.
/// Throws CorrelationError on length mismatch, fewer than two entries, or a
/// constant input.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace techrank
