#include "techrank/factors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "techrank/error.hpp"
#include "techrank/stats.hpp"

namespace techrank {

namespace {

FeatureVector max_normalized(std::string name, std::vector<double> totals, const char* what) {
    const double top = totals.empty() ? 0.0 : *std::max_element(totals.begin(), totals.end());
    if (!(top > 0.0)) throw DegenerateFactorError(std::string(what) + ": every total is zero");
    for (double& v : totals) v /= top;
    return FeatureVector{std::move(name), std::move(totals)};
}

double deg2rad(double degrees) { return degrees * std::numbers::pi / 180.0; }

double hav(double angle) {
    const double s = std::sin(angle / 2.0);
    return s * s;
}

}  // namespace

void FeatureVector::validate() const {
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0)
            throw ConfigError("feature '" + name + "' has a value outside [0, 1]");
    }
}

void PreferenceProfile::validate() const {
    if (entries.empty()) throw ConfigError(std::string("empty preference profile for ") + layer_name(target));
    std::set<std::string> names;
    double total = 0.0;
    for (const auto& e : entries) {
        if (!names.insert(e.feature).second) throw ConfigError("duplicate preference feature '" + e.feature + "'");
        if (!std::isfinite(e.weight)) throw ConfigError("preference weight for '" + e.feature + "' is not finite");
        total += std::abs(e.weight);
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ConfigError(std::string("absolute preference weights for ") + layer_name(target) + " sum to " +
                          std::to_string(total) + ", expected 1");
}

GeoPoint GeoPoint::make(double latitude, double longitude) {
    if (!std::isfinite(latitude) || latitude < -90.0 || latitude > 90.0)
        throw ConfigError("latitude out of range: " + std::to_string(latitude));
    if (!std::isfinite(longitude) || longitude < -180.0 || longitude > 180.0)
        throw ConfigError("longitude out of range: " + std::to_string(longitude));
    if (longitude == -180.0) longitude = 180.0;
    return GeoPoint{latitude, longitude};
}

FeatureVector investment_factor_companies(const InvestmentGraph& investments) {
    return max_normalized(kInvestmentFeature, investments.company_totals(), "company investment factor");
}

FeatureVector investment_factor_technologies(const InvestmentGraph& investments, const BipartiteGraph& graph) {
    if (!(investments.companies() == graph.companies()))
        throw AlignmentError("investment and technology graphs use different company registries");
    const auto company_totals = investments.company_totals();
    std::vector<double> totals(graph.n_technologies(), 0.0);
    for (EntityId c = 0; c < graph.n_companies(); ++c) {
        for (EntityId t : graph.technologies_of(c)) totals[t] += company_totals[c];
    }
    return max_normalized(kInvestmentFeature, std::move(totals), "technology investment factor");
}

double haversine(const GeoPoint& a, const GeoPoint& b) {
    const double phi1 = deg2rad(a.latitude);
    const double phi2 = deg2rad(b.latitude);
    const double h = hav(phi2 - phi1) + std::cos(phi1) * std::cos(phi2) * hav(deg2rad(b.longitude - a.longitude));
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

LocationFactor location_factor(const EntityRegistry& companies,
                               const std::unordered_map<std::string, GeoPoint>& locations,
                               const GeoPoint& investor) {
    LocationFactor out;
    out.feature.name = kLocationFeature;
    out.feature.values.assign(companies.size(), 0.0);

    std::vector<double> distance(companies.size(), 0.0);
    std::vector<bool> located(companies.size(), false);
    double farthest = 0.0;
    for (EntityId c = 0; c < companies.size(); ++c) {
        auto it = locations.find(companies.name(c));
        if (it == locations.end()) {
            out.missing.push_back(companies.name(c));
            continue;
        }
        located[c] = true;
        distance[c] = haversine(investor, it->second);
        farthest = std::max(farthest, distance[c]);
    }
    if (!(farthest > 0.0))
        throw DegenerateFactorError("location factor: no located company is away from the investor");
    for (EntityId c = 0; c < companies.size(); ++c) {
        if (located[c]) out.feature.values[c] = 1.0 - distance[c] / farthest;
    }
    return out;
}

std::vector<double> compose_preferences(const PreferenceProfile& profile, std::span<const FeatureVector> features) {
    profile.validate();
    if (features.size() != profile.entries.size())
        throw ConfigError("preference profile lists " + std::to_string(profile.entries.size()) + " features, got " +
                          std::to_string(features.size()));
    const std::size_t n = features.empty() ? 0 : features.front().values.size();
    std::vector<double> out(n, 0.0);
    for (const auto& entry : profile.entries) {
        auto it = std::find_if(features.begin(), features.end(),
                               [&](const FeatureVector& f) { return f.name == entry.feature; });
        if (it == features.end()) throw ConfigError("no feature named '" + entry.feature + "'");
        if (it->values.size() != n) throw ConfigError("feature '" + it->name + "' covers a different layer size");
        for (std::size_t i = 0; i < n; ++i) out[i] += entry.weight * it->values[i];
    }
    return out;
}

std::vector<double> compose_ground_truth(const PreferenceProfile& profile, std::span<const FeatureVector> features) {
    return normalize_minmax(compose_preferences(profile, features));
}

}  // namespace techrank
