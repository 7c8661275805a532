#include "techrank/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <tuple>

#include "techrank/error.hpp"

namespace techrank {

const char* layer_name(Layer layer) {
    return layer == Layer::Companies ? "companies" : "technologies";
}

std::string EntityRegistry::normalize(std::string_view name) {
    auto is_space = [](unsigned char ch) { return std::isspace(ch) != 0; };
    while (!name.empty() && is_space(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
    while (!name.empty() && is_space(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    std::string out(name);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

EntityId EntityRegistry::add(std::string_view name) {
    std::string key = normalize(name);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const EntityId id = names_.size();
    index_.emplace(key, id);
    names_.push_back(std::move(key));
    return id;
}

std::optional<EntityId> EntityRegistry::find(std::string_view name) const {
    auto it = index_.find(normalize(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

BipartiteGraph::BipartiteGraph(EntityRegistry companies, EntityRegistry technologies,
                               std::vector<IndexPair> edges)
    : companies_(std::move(companies)), technologies_(std::move(technologies)) {
    if (edges.empty()) throw ConstructionError("bipartite graph needs at least one edge");
    const std::size_t nc = companies_.size();
    const std::size_t nt = technologies_.size();
    for (const auto& [c, t] : edges) {
        if (c >= nc || t >= nt) throw ConstructionError("edge refers to an unregistered entity");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    row_offsets_.assign(nc + 1, 0);
    row_targets_.reserve(edges.size());
    for (const auto& [c, t] : edges) {
        ++row_offsets_[c + 1];
        row_targets_.push_back(t);
    }
    std::partial_sum(row_offsets_.begin(), row_offsets_.end(), row_offsets_.begin());

    col_offsets_.assign(nt + 1, 0);
    for (const auto& [c, t] : edges) ++col_offsets_[t + 1];
    std::partial_sum(col_offsets_.begin(), col_offsets_.end(), col_offsets_.begin());
    col_sources_.resize(edges.size());
    col_edges_.resize(edges.size());
    std::vector<std::size_t> cursor(col_offsets_.begin(), col_offsets_.end() - 1);
    // Rows are visited in increasing company order, so each column comes out sorted.
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [c, t] = edges[e];
        col_sources_[cursor[t]] = c;
        col_edges_[cursor[t]] = e;
        ++cursor[t];
    }

    for (EntityId c = 0; c < nc; ++c) {
        if (company_degree(c) == 0)
            throw ConstructionError("company '" + companies_.name(c) + "' has no technology");
    }
    for (EntityId t = 0; t < nt; ++t) {
        if (technology_degree(t) == 0)
            throw ConstructionError("technology '" + technologies_.name(t) + "' has no company");
    }
}

std::span<const EntityId> BipartiteGraph::technologies_of(EntityId company) const {
    return std::span<const EntityId>(row_targets_).subspan(row_begin(company), company_degree(company));
}

std::span<const EntityId> BipartiteGraph::companies_of(EntityId technology) const {
    return std::span<const EntityId>(col_sources_)
        .subspan(col_offsets_[technology], technology_degree(technology));
}

std::span<const std::size_t> BipartiteGraph::column_edges(EntityId technology) const {
    return std::span<const std::size_t>(col_edges_)
        .subspan(col_offsets_[technology], technology_degree(technology));
}

bool BipartiteGraph::has_edge(EntityId company, EntityId technology) const {
    auto row = technologies_of(company);
    return std::binary_search(row.begin(), row.end(), technology);
}

std::vector<BipartiteGraph::NamePair> BipartiteGraph::pairs() const {
    std::vector<NamePair> out;
    out.reserve(edge_count());
    for (EntityId c = 0; c < n_companies(); ++c) {
        for (EntityId t : technologies_of(c)) out.emplace_back(companies_.name(c), technologies_.name(t));
    }
    return out;
}

BipartiteGraph build_bipartite(std::span<const BipartiteGraph::NamePair> pairs) {
    if (pairs.empty()) throw ConstructionError("empty company-technology pair list");
    EntityRegistry companies;
    EntityRegistry technologies;
    std::vector<BipartiteGraph::IndexPair> edges;
    edges.reserve(pairs.size());
    for (const auto& [company, technology] : pairs) {
        if (EntityRegistry::normalize(company).empty() || EntityRegistry::normalize(technology).empty())
            throw ConstructionError("blank entity identifier in pair list");
        const EntityId c = companies.add(company);
        const EntityId t = technologies.add(technology);
        edges.emplace_back(c, t);
    }
    return BipartiteGraph(std::move(companies), std::move(technologies), std::move(edges));
}

Degrees degrees(const BipartiteGraph& graph) {
    Degrees d;
    d.companies.resize(graph.n_companies());
    d.technologies.resize(graph.n_technologies());
    for (EntityId c = 0; c < graph.n_companies(); ++c) d.companies[c] = graph.company_degree(c);
    for (EntityId t = 0; t < graph.n_technologies(); ++t) d.technologies[t] = graph.technology_degree(t);
    return d;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& graph, std::span<const EntityId> companies) {
    EntityRegistry sub_companies;
    EntityRegistry sub_technologies;
    std::vector<BipartiteGraph::IndexPair> edges;
    for (EntityId c : companies) {
        if (c >= graph.n_companies()) throw ConstructionError("subset refers to an unknown company");
        const EntityId sc = sub_companies.add(graph.companies().name(c));
        for (EntityId t : graph.technologies_of(c)) {
            edges.emplace_back(sc, sub_technologies.add(graph.technologies().name(t)));
        }
    }
    return BipartiteGraph(std::move(sub_companies), std::move(sub_technologies), std::move(edges));
}

InvestmentGraph::InvestmentGraph(EntityRegistry investors, EntityRegistry companies, std::vector<Edge> edges)
    : investors_(std::move(investors)), companies_(std::move(companies)) {
    for (const Edge& e : edges) {
        if (e.investor >= investors_.size() || e.company >= companies_.size())
            throw ConstructionError("investment edge refers to an unregistered entity");
        if (!std::isfinite(e.amount) || e.amount < 0.0)
            throw ConstructionError("investment amounts must be finite and non-negative");
    }
    // Stable so that repeated rounds are summed in input order.
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.investor, a.company) < std::tie(b.investor, b.company);
    });
    for (const Edge& e : edges) {
        if (!edges_.empty() && edges_.back().investor == e.investor && edges_.back().company == e.company) {
            edges_.back().amount += e.amount;
        } else {
            edges_.push_back(e);
        }
    }
}

double InvestmentGraph::amount(EntityId investor, EntityId company) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{investor, company},
                               [](const Edge& e, const std::pair<EntityId, EntityId>& key) {
                                   return std::tie(e.investor, e.company) < std::tie(key.first, key.second);
                               });
    if (it != edges_.end() && it->investor == investor && it->company == company) return it->amount;
    return 0.0;
}

std::vector<double> InvestmentGraph::company_totals() const {
    std::vector<double> totals(companies_.size(), 0.0);
    for (const Edge& e : edges_) totals[e.company] += e.amount;
    return totals;
}

InvestmentGraph InvestmentGraph::realign(const EntityRegistry& companies) const {
    std::vector<std::optional<EntityId>> remap(companies_.size());
    for (EntityId c = 0; c < companies_.size(); ++c) remap[c] = companies.find(companies_.name(c));

    EntityRegistry investors;
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        if (!remap[e.company]) continue;
        edges.push_back({investors.add(investors_.name(e.investor)), *remap[e.company], e.amount});
    }
    return InvestmentGraph(std::move(investors), companies, std::move(edges));
}

}  // namespace techrank
