#include "techrank/ingestion.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "techrank/csv.hpp"
#include "techrank/error.hpp"

namespace techrank {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_labels(std::string_view text, char delimiter) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(delimiter, start);
        if (end == std::string_view::npos) end = text.size();
        std::string label = trim(text.substr(start, end - start));
        if (!label.empty()) out.push_back(std::move(label));
        start = end + 1;
    }
    return out;
}

bool valid_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Returns the field at `column` or an empty view if the column is absent.
std::string_view field(const std::vector<std::string>& row, const std::optional<std::size_t>& column) {
    if (!column || *column >= row.size()) return {};
    return row[*column];
}

}  // namespace

OrganizationLoad load_organizations(std::istream& in, const OrganizationSchema& schema) {
    const csv::Table table = csv::read_table(in, schema.delimiter);
    const auto id_col = table.column(schema.id);
    const auto name_col = table.column(schema.name);
    if (!id_col || !name_col) {
        throw ParseError("malformed header: organizations need '" + schema.id + "' and '" + schema.name +
                         "' columns");
    }
    const auto desc_col = table.column(schema.description);
    const auto cat_col = table.column(schema.categories);
    const auto lat_col = table.column(schema.latitude);
    const auto lon_col = table.column(schema.longitude);
    const auto country_col = table.column(schema.country);

    OrganizationLoad load;
    load.rows = table.rows.size();
    std::unordered_set<std::string> seen;
    auto skip = [&](std::size_t k, const std::string& why) {
        ++load.skipped;
        load.problems.push_back("line " + std::to_string(table.row_lines[k]) + ": " + why);
    };
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& row = table.rows[k];
        OrganizationRecord rec;
        rec.id = trim(field(row, id_col));
        rec.name = trim(field(row, name_col));
        if (rec.id.empty()) {
            skip(k, "missing id");
            continue;
        }
        if (rec.name.empty()) {
            skip(k, "missing name");
            continue;
        }
        if (!seen.insert(EntityRegistry::normalize(rec.id)).second) {
            skip(k, "duplicate id '" + rec.id + "'");
            continue;
        }
        rec.description = std::string(field(row, desc_col));
        rec.categories = split_labels(field(row, cat_col), schema.category_delimiter);
        const std::string lat = trim(field(row, lat_col));
        const std::string lon = trim(field(row, lon_col));
        if (!lat.empty() || !lon.empty()) {
            const auto la = csv::parse_double(lat);
            const auto lo = csv::parse_double(lon);
            if (!la || !lo || *la < -90.0 || *la > 90.0 || *lo < -180.0 || *lo > 180.0) {
                skip(k, "bad coordinates");
                continue;
            }
            rec.latitude = la;
            rec.longitude = lo;
        }
        if (std::string country = trim(field(row, country_col)); !country.empty()) rec.country = std::move(country);
        load.records.push_back(std::move(rec));
    }
    return load;
}

OrganizationLoad load_organizations(const std::string& path, const OrganizationSchema& schema) {
    auto in = open_input(path);
    return with_path(path, [&] { return load_organizations(in, schema); });
}

FundingRoundLoad load_funding_rounds(std::istream& in, const FundingRoundSchema& schema) {
    const csv::Table table = csv::read_table(in, schema.delimiter);
    const auto investor_col = table.column(schema.investor_id);
    const auto company_col = table.column(schema.company_id);
    const auto amount_col = table.column(schema.amount);
    if (!investor_col || !company_col || !amount_col) {
        throw ParseError("malformed header: funding rounds need '" + schema.investor_id + "', '" +
                         schema.company_id + "' and '" + schema.amount + "' columns");
    }
    const auto round_col = table.column(schema.round_id);
    const auto date_col = table.column(schema.announced_on);

    FundingRoundLoad load;
    load.rows = table.rows.size();
    auto skip = [&](std::size_t k, const std::string& why) {
        ++load.skipped;
        load.problems.push_back("line " + std::to_string(table.row_lines[k]) + ": " + why);
    };
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& row = table.rows[k];
        FundingRoundRecord rec;
        rec.round_id = trim(field(row, round_col));
        rec.investor_id = trim(field(row, investor_col));
        rec.company_id = trim(field(row, company_col));
        if (rec.investor_id.empty() || rec.company_id.empty()) {
            skip(k, "missing investor or company id");
            continue;
        }
        const std::string amount = trim(field(row, amount_col));
        if (!amount.empty()) {
            const auto v = csv::parse_double(amount);
            if (!v) {
                skip(k, "malformed amount '" + amount + "'");
                continue;
            }
            if (*v < 0.0) {
                skip(k, "negative amount");
                continue;
            }
            rec.amount = *v;
        }
        rec.announced_on = trim(field(row, date_col));
        if (!rec.announced_on.empty() && !valid_date(rec.announced_on)) {
            skip(k, "malformed date '" + rec.announced_on + "'");
            continue;
        }
        load.records.push_back(std::move(rec));
    }
    return load;
}

FundingRoundLoad load_funding_rounds(const std::string& path, const FundingRoundSchema& schema) {
    auto in = open_input(path);
    return with_path(path, [&] { return load_funding_rounds(in, schema); });
}

std::unordered_map<std::string, GeoPoint> load_locations(std::istream& in, char delimiter) {
    const csv::Table table = csv::read_table(in, delimiter);
    const auto id_col = table.column("entity_id");
    const auto lat_col = table.column("latitude");
    const auto lon_col = table.column("longitude");
    if (!id_col || !lat_col || !lon_col)
        throw ParseError("malformed header: locations need entity_id, latitude, longitude");
    std::unordered_map<std::string, GeoPoint> out;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& row = table.rows[k];
        const auto lat = csv::parse_double(trim(field(row, lat_col)));
        const auto lon = csv::parse_double(trim(field(row, lon_col)));
        const std::string id = EntityRegistry::normalize(field(row, id_col));
        if (id.empty() || !lat || !lon)
            throw ParseError("bad location row on line " + std::to_string(table.row_lines[k]));
        try {
            out[id] = GeoPoint::make(*lat, *lon);
        } catch (const ConfigError& e) {
            throw ParseError("line " + std::to_string(table.row_lines[k]) + ": " + e.what());
        }
    }
    return out;
}

std::unordered_map<std::string, GeoPoint> load_locations(const std::string& path, char delimiter) {
    auto in = open_input(path);
    return with_path(path, [&] { return load_locations(in, delimiter); });
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (char ch : text) {
        const auto u = static_cast<unsigned char>(ch);
        if (u < 0x80 && std::isalnum(u)) {
            current.push_back(static_cast<char>(std::tolower(u)));
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

void SectorFilter::validate() const {
    if (keywords.empty()) throw ConfigError("sector filter needs at least one keyword");
    if (min_matches == 0) throw ConfigError("sector filter min_matches must be positive");
}

std::size_t SectorFilter::count_matches(std::string_view description) const {
    const auto words = tokenize(description);
    std::size_t matches = 0;
    for (const auto& keyword : keywords) {
        const auto needle = tokenize(keyword);
        if (needle.empty() || needle.size() > words.size()) continue;
        auto it = std::search(words.begin(), words.end(), needle.begin(), needle.end());
        if (it != words.end()) ++matches;
    }
    return matches;
}

std::set<std::string> cybersecurity_keywords() {
    return {"cybersecurity", "confidentiality", "integrity", "availability", "secure",     "security",
            "safe",          "reliability",     "dependability", "confidential", "defence", "defensive",
            "privacy"};
}

std::set<std::string> medical_keywords() {
    return {"cure",        "medicine",   "surgery",    "doctors",   "nurses",     "hospital",
            "medication",  "prescription", "pill",     "health",    "cancer",     "antibiotic",
            "hiv",         "cancers",    "disease",    "resonance", "rays",       "cat",
            "blood",       "blood transfusion", "accident", "injuries", "emergency", "poison",
            "transplant",  "biotechnology", "health care", "healthcare", "health-tech", "genetics",
            "dna",         "rna",        "lab",        "heart",     "lung",       "lungs",
            "kidneys",     "brain",      "gynaecologist", "cholesterol", "diabetes", "stroke",
            "infections",  "infection",  "ecg",        "sonogram"};
}

std::set<std::string> load_keywords(std::istream& in) {
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string word = trim(line);
        if (word.empty() || word.front() == '#') continue;
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        out.insert(std::move(word));
    }
    return out;
}

std::set<std::string> load_keywords(const std::string& path) {
    auto in = open_input(path);
    return load_keywords(in);
}

std::vector<OrganizationRecord> filter_sector(std::span<const OrganizationRecord> organizations,
                                              const SectorFilter& filter) {
    filter.validate();
    std::vector<OrganizationRecord> kept;
    for (const auto& org : organizations) {
        if (filter.accepts(org.description)) kept.push_back(org);
    }
    return kept;
}

GraphBundle build_graphs(std::span<const OrganizationRecord> organizations,
                         std::span<const FundingRoundRecord> rounds) {
    EntityRegistry companies;
    EntityRegistry technologies;
    std::vector<BipartiteGraph::IndexPair> edges;
    std::unordered_map<std::string, std::string> display_names;
    std::unordered_map<std::string, GeoPoint> locations;
    std::size_t without_categories = 0;

    for (const auto& org : organizations) {
        std::vector<EntityId> techs;
        for (const auto& label : org.categories) {
            if (!EntityRegistry::normalize(label).empty()) techs.push_back(technologies.add(label));
        }
        if (techs.empty()) {
            ++without_categories;
            continue;
        }
        const EntityId c = companies.add(org.id);
        for (EntityId t : techs) edges.emplace_back(c, t);
        const std::string& key = companies.name(c);
        display_names.emplace(key, org.name);
        if (org.latitude && org.longitude) locations.emplace(key, GeoPoint::make(*org.latitude, *org.longitude));
    }
    if (companies.empty()) throw PipelineError("no organization with a technology survived ingestion");

    EntityRegistry investors;
    std::vector<InvestmentGraph::Edge> funding;
    std::size_t dropped = 0;
    for (const auto& round : rounds) {
        const auto c = companies.find(round.company_id);
        if (!c) {
            ++dropped;
            continue;
        }
        funding.push_back({investors.add(round.investor_id), *c, round.amount});
    }

    BipartiteGraph graph(companies, std::move(technologies), std::move(edges));
    InvestmentGraph investments(std::move(investors), std::move(companies), std::move(funding));
    return GraphBundle{std::move(graph), std::move(investments), std::move(display_names), std::move(locations),
                       without_categories, dropped};
}

}  // namespace techrank
