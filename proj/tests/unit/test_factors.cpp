#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "techrank/error.hpp"
#include "techrank/factors.hpp"

namespace {

using techrank::EntityRegistry;
using techrank::FeatureVector;
using techrank::GeoPoint;
using techrank::InvestmentGraph;
using techrank::Layer;
using techrank::PreferenceProfile;

EntityRegistry registry(std::initializer_list<const char*> names) {
    EntityRegistry r;
    for (const char* n : names) r.add(n);
    return r;
}

InvestmentGraph worked_example() {
    // Two investors; c1 receives 2 and 3, c2 receives 4, c3 receives 1.
    return InvestmentGraph(registry({"i1", "i2"}), registry({"c1", "c2", "c3"}),
                           {{0, 0, 2.0}, {1, 0, 3.0}, {1, 1, 4.0}, {1, 2, 1.0}});
}

TEST(InvestmentFactor, WorkedExample) {
    const auto f = techrank::investment_factor_companies(worked_example());
    EXPECT_EQ(f.values, (std::vector<double>{1.0, 0.8, 0.2}));
}

TEST(InvestmentFactor, EdgeCases) {
    const InvestmentGraph single(registry({"i"}), registry({"c"}), {{0, 0, 5.0}});
    EXPECT_EQ(techrank::investment_factor_companies(single).values, (std::vector<double>{1.0}));
    const InvestmentGraph unfunded(registry({"i"}), registry({"a", "b"}), {{0, 0, 5.0}});
    EXPECT_EQ(techrank::investment_factor_companies(unfunded).values, (std::vector<double>{1.0, 0.0}));
    const InvestmentGraph zero(registry({"i"}), registry({"a"}), {{0, 0, 0.0}});
    EXPECT_THROW(techrank::investment_factor_companies(zero), techrank::DegenerateFactorError);
}

TEST(InvestmentFactor, ScaleInvariant) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> amount(0.0, 1e7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<InvestmentGraph::Edge> edges;
        std::vector<InvestmentGraph::Edge> scaled;
        for (techrank::EntityId i = 0; i < 3; ++i) {
            for (techrank::EntityId c = 0; c < 4; ++c) {
                const double a = amount(rng);
                edges.push_back({i, c, a});
                scaled.push_back({i, c, a * 1000.0});
            }
        }
        const auto f = techrank::investment_factor_companies(
            InvestmentGraph(registry({"i", "j", "k"}), registry({"a", "b", "c", "d"}), edges));
        const auto g = techrank::investment_factor_companies(
            InvestmentGraph(registry({"i", "j", "k"}), registry({"a", "b", "c", "d"}), scaled));
        for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(f.values[k], g.values[k], 1e-12);
    }
}

TEST(InvestmentFactor, Technologies) {
    const auto inv = worked_example();
    // c1 and c2 use t1, c2 and c3 use t2: e^T = [9, 5].
    techrank::BipartiteGraph g(inv.companies(), registry({"t1", "t2"}), {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    const auto f = techrank::investment_factor_technologies(inv, g);
    ASSERT_EQ(f.values.size(), 2u);
    EXPECT_EQ(f.values[0], 1.0);
    EXPECT_NEAR(f.values[1], 5.0 / 9.0, 1e-15);

    techrank::BipartiteGraph all(inv.companies(), registry({"t1", "t2"}),
                                 {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    EXPECT_EQ(techrank::investment_factor_technologies(inv, all).values, (std::vector<double>{1.0, 1.0}));

    techrank::BipartiteGraph other(registry({"x", "y", "z"}), registry({"t"}), {{0, 0}, {1, 0}, {2, 0}});
    EXPECT_THROW(techrank::investment_factor_technologies(inv, other), techrank::AlignmentError);
}

TEST(Haversine, Properties) {
    const auto paris = GeoPoint::make(48.8566, 2.3522);
    const auto london = GeoPoint::make(51.5074, -0.1278);
    EXPECT_EQ(techrank::haversine(paris, paris), 0.0);
    EXPECT_EQ(techrank::haversine(paris, london), techrank::haversine(london, paris));
    EXPECT_NEAR(techrank::haversine(GeoPoint::make(0, 0), GeoPoint::make(0, 180)), std::numbers::pi * 6371.0, 1e-6);
    EXPECT_NEAR(techrank::haversine(paris, london),
                techrank::testing::law_of_cosines_km(48.8566, 2.3522, 51.5074, -0.1278), 0.5);
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> lat(-90, 90);
    std::uniform_real_distribution<double> lon(-179.9, 180);
    for (int i = 0; i < 200; ++i) {
        const double d = techrank::haversine(GeoPoint::make(lat(rng), lon(rng)), GeoPoint::make(lat(rng), lon(rng)));
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, std::numbers::pi * 6371.0 + 1e-6);
    }
}

TEST(GeoPoint, Validation) {
    EXPECT_THROW(GeoPoint::make(91, 0), techrank::ConfigError);
    EXPECT_THROW(GeoPoint::make(0, 181), techrank::ConfigError);
    EXPECT_EQ(GeoPoint::make(0, -180).longitude, 180.0);
}

GeoPoint east_of_origin(double km) { return GeoPoint::make(0.0, km / 6371.0 * 180.0 / std::numbers::pi); }

TEST(LocationFactor, DistanceExample) {
    const auto companies = registry({"a", "b", "c"});
    const std::unordered_map<std::string, GeoPoint> where{
        {"a", east_of_origin(100)}, {"b", east_of_origin(200)}, {"c", east_of_origin(400)}};
    const auto f = techrank::location_factor(companies, where, GeoPoint::make(0, 0));
    EXPECT_NEAR(f.feature.values[0], 0.75, 1e-12);
    EXPECT_NEAR(f.feature.values[1], 0.5, 1e-12);
    EXPECT_NEAR(f.feature.values[2], 0.0, 1e-12);
    EXPECT_TRUE(f.missing.empty());
}

TEST(LocationFactor, MissingAndDegenerate) {
    const auto companies = registry({"near", "far", "nowhere"});
    const std::unordered_map<std::string, GeoPoint> where{{"near", GeoPoint::make(0, 0)},
                                                          {"far", east_of_origin(50)}};
    const auto f = techrank::location_factor(companies, where, GeoPoint::make(0, 0));
    EXPECT_EQ(f.feature.values[0], 1.0);
    EXPECT_EQ(f.feature.values[1], 0.0);
    EXPECT_EQ(f.feature.values[2], 0.0);
    EXPECT_EQ(f.missing, (std::vector<std::string>{"nowhere"}));

    const std::unordered_map<std::string, GeoPoint> home{{"near", GeoPoint::make(0, 0)}};
    EXPECT_THROW(techrank::location_factor(registry({"near"}), home, GeoPoint::make(0, 0)),
                 techrank::DegenerateFactorError);
}

TEST(Compose, Examples) {
    const std::vector<FeatureVector> features{{"f1", {0.0, 0.5, 1.0}}, {"f2", {1.0, 0.0, 0.0}}};
    PreferenceProfile only{Layer::Companies, {{"f1", 1.0}}};
    EXPECT_EQ(techrank::compose_ground_truth(only, std::span(features.data(), 1)),
              (std::vector<double>{0.0, 0.5, 1.0}));
    PreferenceProfile mixed{Layer::Companies, {{"f1", 0.8}, {"f2", 0.2}}};
    const auto raw = techrank::compose_preferences(mixed, features);
    EXPECT_NEAR(raw[0], 0.2, 1e-15);
    EXPECT_NEAR(raw[1], 0.4, 1e-15);
    EXPECT_NEAR(raw[2], 0.8, 1e-15);
    const std::vector<FeatureVector> same{{"f1", {0.2, 0.9}}, {"f2", {0.2, 0.9}}};
    PreferenceProfile cancel{Layer::Companies, {{"f1", 0.5}, {"f2", -0.5}}};
    EXPECT_EQ(techrank::compose_ground_truth(cancel, same), (std::vector<double>{0.0, 0.0}));
}

TEST(Compose, Errors) {
    const std::vector<FeatureVector> features{{"f1", {0.0, 1.0}}};
    PreferenceProfile unknown{Layer::Companies, {{"other", 1.0}}};
    EXPECT_THROW(techrank::compose_preferences(unknown, features), techrank::ConfigError);
    const std::vector<FeatureVector> ragged{{"f1", {0.0, 1.0}}, {"f2", {1.0}}};
    PreferenceProfile two{Layer::Companies, {{"f1", 0.5}, {"f2", 0.5}}};
    EXPECT_THROW(techrank::compose_preferences(two, ragged), techrank::ConfigError);
    PreferenceProfile unnormalized{Layer::Companies, {{"f1", 0.5}, {"f2", 0.6}}};
    EXPECT_THROW(unnormalized.validate(), techrank::ConfigError);
    PreferenceProfile duplicate{Layer::Companies, {{"f1", 0.5}, {"f1", 0.5}}};
    EXPECT_THROW(duplicate.validate(), techrank::ConfigError);
}

}  // namespace
