#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "techrank/factors.hpp"
#include "techrank/graph.hpp"

namespace techrank {

struct OrganizationRecord {
    std::string id;
    std::string name;
    std::string description;
    std::vector<std::string> categories;
    std::optional<double> latitude;
    std::optional<double> longitude;
    std::optional<std::string> country;
};

struct FundingRoundRecord {
    std::string round_id;
    std::string investor_id;
    std::string company_id;
    double amount = 0.0;
    std::string announced_on;  ///< YYYY-MM-DD or empty
};

/// Column names for organization files. Only `id` and `name` are required
/// to be present in the header; the rest read as empty when absent.
struct OrganizationSchema {
    std::string id = "uuid";
    std::string name = "name";
    std::string description = "description";
    std::string categories = "category_list";
    std::string latitude = "latitude";
    std::string longitude = "longitude";
    std::string country = "country_code";
    char delimiter = ',';
    char category_delimiter = ',';
};

/// Column names for the flattened funding-round file (one row per investor
/// participation). All columns except `round_id` and `announced_on` are
/// required.
struct FundingRoundSchema {
    std::string round_id = "funding_round_uuid";
    std::string investor_id = "investor_uuid";
    std::string company_id = "org_uuid";
    std::string amount = "raised_amount_usd";
    std::string announced_on = "announced_on";
    char delimiter = ',';
};

template <typename Record>
struct LoadResult {
    std::vector<Record> records;
    std::size_t rows = 0;
    std::size_t skipped = 0;
    /// One message per skipped row, "line N: reason".
    std::vector<std::string> problems;
};

using OrganizationLoad = LoadResult<OrganizationRecord>;
using FundingRoundLoad = LoadResult<FundingRoundRecord>;

/// Rows without id or name, with a duplicate id, or with unparseable
/// coordinates are skipped and counted. Throws ParseError on an unreadable
/// file or a header lacking the id or name column.
OrganizationLoad load_organizations(std::istream& in, const OrganizationSchema& schema = {});
OrganizationLoad load_organizations(const std::string& path, const OrganizationSchema& schema = {});

/// Empty amounts read as 0. Rows with a malformed amount (grouping
/// separators included), a negative amount, a malformed date, or a missing
/// investor/company id are skipped and counted.
FundingRoundLoad load_funding_rounds(std::istream& in, const FundingRoundSchema& schema = {});
FundingRoundLoad load_funding_rounds(const std::string& path, const FundingRoundSchema& schema = {});

/// Location lookup file with columns entity_id, latitude, longitude. Keys
/// are case-normalized. Throws ParseError on a bad header or a bad row.
std::unordered_map<std::string, GeoPoint> load_locations(std::istream& in, char delimiter = ',');
std::unordered_map<std::string, GeoPoint> load_locations(const std::string& path, char delimiter = ',');

/**
 * Keyword-based sector selection.
 *
 * A description matches a keyword when the keyword's words appear as
 * consecutive whole words of the description, ignoring case. Words are
 * maximal runs of ASCII letters and digits, so "health-tech" matches
 * "Health tech" and "health-tech" but not "healthtech".
 */
struct SectorFilter {
    std::set<std::string> keywords;
    std::size_t min_matches = 2;

    /// Throws ConfigError when keywords is empty or min_matches is 0.
    void validate() const;

    /// Number of distinct keywords found in `description`.
    std::size_t count_matches(std::string_view description) const;
    bool accepts(std::string_view description) const { return count_matches(description) >= min_matches; }
};

std::set<std::string> cybersecurity_keywords();
std::set<std::string> medical_keywords();

/// One keyword per line; blank lines and lines starting with '#' ignored.
std::set<std::string> load_keywords(std::istream& in);
std::set<std::string> load_keywords(const std::string& path);

std::vector<OrganizationRecord> filter_sector(std::span<const OrganizationRecord> organizations,
                                              const SectorFilter& filter);

/// Lowercase ASCII words of `text`.
std::vector<std::string> tokenize(std::string_view text);

struct GraphBundle {
    BipartiteGraph technologies;
    InvestmentGraph investments;
    /// Organization names keyed by company identifier.
    std::unordered_map<std::string, std::string> display_names;
    /// Coordinates of companies whose organization record carried them.
    std::unordered_map<std::string, GeoPoint> locations;
    std::size_t organizations_without_categories = 0;
    std::size_t rounds_dropped = 0;
};

/// Companies are keyed by organization id; technologies by category label.
/// Organizations without categories are excluded, rounds toward unknown
/// companies are dropped, and repeated investor-company rounds are summed.
/// Throws PipelineError when no company survives.
GraphBundle build_graphs(std::span<const OrganizationRecord> organizations,
                         std::span<const FundingRoundRecord> rounds);

}  // namespace techrank
