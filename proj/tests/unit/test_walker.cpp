#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "techrank/error.hpp"
#include "techrank/stats.hpp"
#include "techrank/walker.hpp"

namespace {

using techrank::BipartiteGraph;
using techrank::WalkerParams;
using Pairs = std::vector<BipartiteGraph::NamePair>;
namespace oracle = techrank::testing;

BipartiteGraph two_by_two() { return techrank::build_bipartite(Pairs{{"A", "x"}, {"A", "y"}, {"B", "y"}}); }

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

TEST(Walker, InitIsDegree) {
    const auto s = techrank::init_weights(two_by_two());
    EXPECT_EQ(s.companies, (std::vector<double>{2, 1}));
    EXPECT_EQ(s.technologies, (std::vector<double>{1, 2}));
}

TEST(Walker, TransitionExamples) {
    const auto uniform = techrank::transition_matrices(
        techrank::build_bipartite(Pairs{{"a", "x"}, {"b", "x"}}), 0.0, 0.0);
    EXPECT_EQ(uniform.to_company, (std::vector<double>{0.5, 0.5}));

    // beta = 1: column y holds companies of degree 2 and 1, weights 1/2 and 1.
    const auto g = two_by_two();
    const auto tm = techrank::transition_matrices(g, 0.0, 1.0);
    const auto col = g.column_edges(1);
    ASSERT_EQ(col.size(), 2u);
    EXPECT_NEAR(tm.to_company[col[0]], 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(tm.to_company[col[1]], 2.0 / 3.0, 1e-15);
}

TEST(Walker, TransitionsMatchDenseOracle) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> param(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_graph(25, 10, 0.2, rng);
        const double a = param(rng);
        const double b = param(rng);
        const auto tm = techrank::transition_matrices(g, a, b);
        const auto dense = oracle::dense_transitions(oracle::dense_adjacency(g), a, b);
        for (techrank::EntityId c = 0; c < g.n_companies(); ++c) {
            for (std::size_t e = g.row_begin(c); e < g.row_end(c); ++e) {
                const auto t = g.edge_technology(e);
                EXPECT_NEAR(tm.to_company[e], dense.to_company[c][t], 1e-12);
                EXPECT_NEAR(tm.to_technology[e], dense.to_technology[c][t], 1e-12);
            }
        }
    }
}

TEST(Walker, TransitionsAreStochastic) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> param(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = oracle::random_graph(60, 20, 0.1, rng);
        const auto tm = techrank::transition_matrices(g, param(rng), param(rng));
        for (techrank::EntityId t = 0; t < g.n_technologies(); ++t) {
            double s = 0.0;
            for (auto e : g.column_edges(t)) s += tm.to_company[e];
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
        for (techrank::EntityId c = 0; c < g.n_companies(); ++c) {
            double s = 0.0;
            for (std::size_t e = g.row_begin(c); e < g.row_end(c); ++e) s += tm.to_technology[e];
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(Walker, ExtremeExponentIsRejected) {
    std::mt19937_64 rng(1);
    const auto g = oracle::random_graph(20, 5, 0.5, rng);
    EXPECT_THROW(techrank::transition_matrices(g, 0.0, -2000.0), techrank::ParameterRangeError);
}

TEST(Walker, SingleStepExample) {
    const auto g = two_by_two();
    const auto tm = techrank::transition_matrices(g, 0.0, 0.0);
    const auto next = techrank::step(g, tm, techrank::init_weights(g));
    EXPECT_EQ(next.companies, (std::vector<double>{2, 1}));
}

TEST(Walker, StepExchangesMass) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> param(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_graph(40, 15, 0.15, rng);
        const auto tm = techrank::transition_matrices(g, param(rng), param(rng));
        auto s = techrank::init_weights(g);
        for (int i = 0; i < 50; ++i) {
            const auto next = techrank::step(g, tm, s);
            EXPECT_NEAR(sum(next.companies), sum(s.technologies), 1e-9 * sum(s.technologies));
            EXPECT_NEAR(sum(next.technologies), sum(s.companies), 1e-9 * sum(s.companies));
            s = next;
        }
    }
}

TEST(Walker, CompleteGraphConvergesImmediately) {
    Pairs pairs;
    for (const char* c : {"a", "b", "c"}) {
        for (const char* t : {"x", "y"}) pairs.emplace_back(c, t);
    }
    WalkerParams p;
    p.alpha = 1.3;
    p.beta = -0.7;
    const auto s = techrank::run(techrank::build_bipartite(pairs), p);
    EXPECT_TRUE(s.converged);
    EXPECT_EQ(s.iterations, 1u);
}

TEST(Walker, DegenerateShapesConverge) {
    for (const auto& pairs : {Pairs{{"a", "x"}, {"a", "y"}, {"a", "z"}}, Pairs{{"a", "x"}, {"b", "x"}}}) {
        const auto s = techrank::run(techrank::build_bipartite(pairs), WalkerParams{});
        EXPECT_TRUE(s.converged);
    }
}

TEST(Walker, StarCentreRanksFirst) {
    Pairs pairs{{"hub", "x"}, {"hub", "y"}, {"hub", "z"}, {"a", "x"}, {"b", "y"}, {"c", "z"}};
    const auto g = techrank::build_bipartite(pairs);
    const auto s = techrank::run(g, WalkerParams{});
    const auto hub = *g.companies().find("hub");
    for (techrank::EntityId c = 0; c < g.n_companies(); ++c) {
        if (c != hub) EXPECT_GT(s.companies[hub], s.companies[c]);
    }
}

TEST(Walker, PermutationEquivariant) {
    std::mt19937_64 rng(4);
    const auto g = oracle::random_graph(15, 8, 0.2, rng);
    auto pairs = g.pairs();
    std::reverse(pairs.begin(), pairs.end());
    const auto h = techrank::build_bipartite(pairs);
    WalkerParams p;
    p.alpha = 0.4;
    p.beta = -0.6;
    const auto a = techrank::run(g, p);
    const auto b = techrank::run(h, p);
    const auto na = techrank::normalize_minmax(a.companies);
    const auto nb = techrank::normalize_minmax(b.companies);
    for (techrank::EntityId c = 0; c < g.n_companies(); ++c) {
        const auto other = *h.companies().find(g.companies().name(c));
        EXPECT_NEAR(na[c], nb[other], 1e-9);
    }
}

TEST(Walker, Deterministic) {
    std::mt19937_64 rng(10);
    const auto g = oracle::random_graph(30, 12, 0.15, rng);
    WalkerParams p;
    p.alpha = -0.8;
    p.beta = 0.36;
    const auto a = techrank::run(g, p);
    const auto b = techrank::run(g, p);
    EXPECT_EQ(a.companies, b.companies);
    EXPECT_EQ(a.technologies, b.technologies);
    EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Walker, MatchesDenseEigenvectorAwayFromOrigin) {
    std::mt19937_64 rng(12);
    int checked = 0;
    while (checked < 5) {
        const auto g = oracle::random_graph(20, 8, 0.2, rng);
        const auto m = oracle::dense_adjacency(g);
        if (!oracle::is_connected(m)) continue;
        WalkerParams p;
        p.alpha = 0.52;
        p.beta = -1.04;
        p.tolerance = 1e-12;
        p.max_iterations = 100000;
        const auto s = techrank::run(g, p);
        ASSERT_TRUE(s.converged);
        const auto dense = oracle::dense_transitions(m, p.alpha, p.beta);
        const auto eig = oracle::dominant_eigenvector(oracle::two_step_operator(dense),
                                                      std::vector<double>(g.n_companies(), 1.0), 200000);
        EXPECT_LT(max_abs_diff(techrank::normalize_minmax(s.companies), techrank::normalize_minmax(eig)), 1e-6);
        ++checked;
    }
}

TEST(Walker, ReportsNonConvergence) {
    std::mt19937_64 rng(6);
    const auto g = oracle::random_graph(20, 10, 0.2, rng);
    WalkerParams p;
    p.alpha = 1.0;
    p.beta = 1.0;
    p.max_iterations = 2;
    const auto s = techrank::run(g, p);
    EXPECT_FALSE(s.converged);
    EXPECT_EQ(s.iterations, 2u);
}

TEST(Walker, ConvergedStateIsStable) {
    std::mt19937_64 rng(13);
    const auto g = oracle::random_graph(20, 10, 0.2, rng);
    WalkerParams p;
    p.alpha = 0.3;
    p.beta = 0.2;
    const auto s = techrank::run(g, p);
    ASSERT_TRUE(s.converged);
    // The last step moved both layers by less than the tolerance; one more
    // double step (same layer parity) should too.
    const auto tm = techrank::transition_matrices(g, p.alpha, p.beta);
    const auto next = techrank::step(g, tm, techrank::step(g, tm, s));
    EXPECT_LT(techrank::normalized_change(s.companies, next.companies), 10 * p.tolerance);
    EXPECT_LE(s.iterations_companies, s.iterations);
    EXPECT_LE(s.iterations_technologies, s.iterations);
}

TEST(Walker, TrajectoryStartsAtNormalizedDegree) {
    const auto g = two_by_two();
    WalkerParams p;
    p.record_trajectory = true;
    const auto s = techrank::run(g, p);
    ASSERT_EQ(s.trajectory.size(), s.iterations + 1);
    EXPECT_EQ(s.trajectory.front().companies, (std::vector<double>{1.0, 0.0}));
}

TEST(Walker, ParamsValidate) {
    WalkerParams p;
    p.tolerance = 0.0;
    EXPECT_THROW(p.validate(), techrank::Error);
    p = WalkerParams{};
    p.max_iterations = 0;
    EXPECT_THROW(p.validate(), techrank::Error);
    p = WalkerParams{};
    p.alpha = NAN;
    EXPECT_THROW(p.validate(), techrank::Error);
}

}  // namespace
