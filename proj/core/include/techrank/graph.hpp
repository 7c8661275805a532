#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace techrank {

using EntityId = std::size_t;

/// The two sides of the company-technology graph.
enum class Layer { Companies, Technologies };

const char* layer_name(Layer layer);

/**
 * Ordered set of entity identifiers with a dense id for each.
 *
 * Identifiers are case-normalized on insertion (lowercased, surrounding
 * whitespace trimmed), so "Cloud Security " and "cloud security" are the same
 * entity. Ids are assigned contiguously from 0 in first-seen order.
 */
class EntityRegistry {
public:
    EntityRegistry() = default;

    static std::string normalize(std::string_view name);

    /// Registers `name` if absent; returns its id either way.
    EntityId add(std::string_view name);

    std::optional<EntityId> find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    const std::string& name(EntityId id) const { return names_.at(id); }
    std::span<const std::string> names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    friend bool operator==(const EntityRegistry& a, const EntityRegistry& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, EntityId> index_;
};

/**
 * Binary company-technology adjacency.
 *
 * Stored as compressed rows (one sorted technology list per company) plus a
 * column index pointing back into the row storage, so both the company and
 * the technology side can be iterated without scanning the whole matrix.
 * Edges are numbered by their position in row storage; per-edge quantities
 * such as transition probabilities are kept in that order.
 *
 * Every company and every technology has at least one edge.
 */
class BipartiteGraph {
public:
    using NamePair = std::pair<std::string, std::string>;
    using IndexPair = std::pair<EntityId, EntityId>;

    /// Duplicate edges collapse. Throws ConstructionError on an empty edge
    /// list, out-of-range ids, or any company/technology without edges.
    BipartiteGraph(EntityRegistry companies, EntityRegistry technologies,
                   std::vector<IndexPair> edges);

    const EntityRegistry& companies() const { return companies_; }
    const EntityRegistry& technologies() const { return technologies_; }
    std::size_t n_companies() const { return companies_.size(); }
    std::size_t n_technologies() const { return technologies_.size(); }
    std::size_t edge_count() const { return row_targets_.size(); }

    // Row storage.
    std::size_t row_begin(EntityId company) const { return row_offsets_[company]; }
    std::size_t row_end(EntityId company) const { return row_offsets_[company + 1]; }
    EntityId edge_technology(std::size_t edge) const { return row_targets_[edge]; }
    std::span<const EntityId> technologies_of(EntityId company) const;

    // Column view: companies of a technology, and the matching edge numbers.
    std::span<const EntityId> companies_of(EntityId technology) const;
    std::span<const std::size_t> column_edges(EntityId technology) const;

    std::size_t company_degree(EntityId company) const { return row_end(company) - row_begin(company); }
    std::size_t technology_degree(EntityId technology) const {
        return col_offsets_[technology + 1] - col_offsets_[technology];
    }

    bool has_edge(EntityId company, EntityId technology) const;

    /// All edges as (company name, technology name), row-major.
    std::vector<NamePair> pairs() const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.companies_ == b.companies_ && a.technologies_ == b.technologies_ &&
               a.row_offsets_ == b.row_offsets_ && a.row_targets_ == b.row_targets_;
    }

private:
    EntityRegistry companies_;
    EntityRegistry technologies_;
    std::vector<std::size_t> row_offsets_;
    std::vector<EntityId> row_targets_;
    std::vector<std::size_t> col_offsets_;
    std::vector<EntityId> col_sources_;
    std::vector<std::size_t> col_edges_;
};

/// Registries are filled in first-seen order. Throws ConstructionError if
/// `pairs` is empty.
BipartiteGraph build_bipartite(std::span<const BipartiteGraph::NamePair> pairs);

struct Degrees {
    std::vector<std::size_t> companies;
    std::vector<std::size_t> technologies;
};

Degrees degrees(const BipartiteGraph& graph);

/// Graph restricted to `companies` (kept in the given order) and every
/// technology they touch, in first-seen order.
BipartiteGraph induced_subgraph(const BipartiteGraph& graph, std::span<const EntityId> companies);

/**
 * Investor-company funding totals.
 *
 * Each stored amount is the sum of every funding round from one investor to
 * one company. Companies without any funding are present in the company
 * registry and simply have no edges.
 */
class InvestmentGraph {
public:
    struct Edge {
        EntityId investor;
        EntityId company;
        double amount;
    };

    /// Repeated (investor, company) entries are summed. Throws
    /// ConstructionError on negative or non-finite amounts or bad ids.
    InvestmentGraph(EntityRegistry investors, EntityRegistry companies, std::vector<Edge> edges);

    const EntityRegistry& investors() const { return investors_; }
    const EntityRegistry& companies() const { return companies_; }
    std::span<const Edge> edges() const { return edges_; }

    double amount(EntityId investor, EntityId company) const;

    /// Total received per company, in company-registry order.
    std::vector<double> company_totals() const;

    /// Same funding re-expressed over another company registry. Companies of
    /// `companies` that are unknown here get no edges; funding toward
    /// companies outside `companies` is dropped.
    InvestmentGraph realign(const EntityRegistry& companies) const;

private:
    EntityRegistry investors_;
    EntityRegistry companies_;
    std::vector<Edge> edges_;
};

}  // namespace techrank
