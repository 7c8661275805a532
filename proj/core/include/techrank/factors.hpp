#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "techrank/graph.hpp"

namespace techrank {

inline constexpr double kEarthRadiusKm = 6371.0;

inline constexpr const char* kInvestmentFeature = "previous_investments";
inline constexpr const char* kLocationFeature = "location";

/// A per-entity score in [0, 1] over one layer, in registry order.
struct FeatureVector {
    std::string name;
    std::vector<double> values;

    /// Throws ConfigError if any value lies outside [0, 1] or is not finite.
    void validate() const;
};

struct PreferenceEntry {
    std::string feature;
    double weight = 0.0;
};

/**
 * How much an investor cares about each feature of one layer.
 *
 * Weights may be negative for features the investor is repelled by; the
 * absolute weights must sum to one.
 */
struct PreferenceProfile {
    Layer target = Layer::Companies;
    std::vector<PreferenceEntry> entries;

    /// Throws ConfigError on an empty profile, duplicate feature names,
    /// non-finite weights, or absolute weights not summing to 1 (within 1e-9).
    void validate() const;
};

struct GeoPoint {
    double latitude = 0.0;   ///< degrees, [-90, 90]
    double longitude = 0.0;  ///< degrees, (-180, 180]

    /// Throws ConfigError when out of range. A longitude of exactly -180 is
    /// accepted and treated as 180.
    static GeoPoint make(double latitude, double longitude);
};

/// Total funding received by each company relative to the best-funded one.
/// Throws DegenerateFactorError when no company received anything.
FeatureVector investment_factor_companies(const InvestmentGraph& investments);

/// Funding pushed through to technologies (sum of the totals of the
/// companies working on each one), relative to the best-funded technology.
/// Throws AlignmentError when the two graphs do not share the same company
/// registry, DegenerateFactorError when every total is zero.
FeatureVector investment_factor_technologies(const InvestmentGraph& investments, const BipartiteGraph& graph);

/// Great-circle distance in kilometers.
double haversine(const GeoPoint& a, const GeoPoint& b);

struct LocationFactor {
    FeatureVector feature;
    /// Companies with no known location; they score 0.
    std::vector<std::string> missing;
};

/// Proximity to the investor, 1 - h / h_max over the companies of `companies`
/// that have a location. Throws DegenerateFactorError when every located
/// company sits on the investor (or none is located).
LocationFactor location_factor(const EntityRegistry& companies,
                               const std::unordered_map<std::string, GeoPoint>& locations,
                               const GeoPoint& investor);

/// Weighted sum of features, one weight per feature, matched by name.
/// Throws ConfigError on name or length mismatch.
std::vector<double> compose_preferences(const PreferenceProfile& profile, std::span<const FeatureVector> features);

/// compose_preferences followed by min-max normalization: the calibration
/// ground truth.
std::vector<double> compose_ground_truth(const PreferenceProfile& profile, std::span<const FeatureVector> features);

}  // namespace techrank
