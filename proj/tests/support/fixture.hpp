#pragma once

// Synthetic Crunchbase-style exports for end-to-end tests.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace techrank::testing {

struct DatasetSpec {
    std::size_t organizations = 60;
    std::size_t categories = 30;
    std::size_t investors = 12;
    std::uint64_t seed = 1;
};

inline std::string padded(const char* prefix, std::size_t i) {
    std::string digits = std::to_string(i);
    return prefix + std::string(digits.size() < 4 ? 4 - digits.size() : 0, '0') + digits;
}

/// Writes organizations.csv, funding_rounds.csv and config.json into `dir`.
/// Most organizations describe themselves with two or more security terms;
/// about one in eight does not and is dropped by the sector filter.
inline void write_synthetic_dataset(const std::filesystem::path& dir, const DatasetSpec& spec) {
    std::filesystem::create_directories(dir);
    std::mt19937_64 rng(spec.seed);
    const std::vector<std::string> terms{"security", "privacy", "secure", "integrity", "confidential", "defensive"};
    const std::vector<std::string> filler{"platform", "cloud", "analytics", "teams", "enterprise", "data"};

    // Zipf-like category popularity.
    std::vector<double> popularity(spec.categories);
    for (std::size_t k = 0; k < spec.categories; ++k) popularity[k] = 1.0 / static_cast<double>(k + 1);
    std::discrete_distribution<std::size_t> category(popularity.begin(), popularity.end());
    std::uniform_int_distribution<std::size_t> n_categories(1, 5);
    std::uniform_int_distribution<std::size_t> pick_term(0, terms.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_filler(0, filler.size() - 1);
    std::uniform_real_distribution<double> lat(25.0, 60.0);
    std::uniform_real_distribution<double> lon(-120.0, 30.0);
    std::bernoulli_distribution off_sector(0.125);
    std::bernoulli_distribution unlocated(0.1);

    std::ofstream orgs(dir / "organizations.csv", std::ios::binary);
    orgs << "uuid,name,description,category_list,latitude,longitude,country_code\n";
    for (std::size_t i = 0; i < spec.organizations; ++i) {
        std::string description = "We build " + filler[pick_filler(rng)] + " tools";
        if (!off_sector(rng)) {
            const auto a = pick_term(rng);
            auto b = pick_term(rng);
            if (b == a) b = (a + 1) % terms.size();
            description += " for " + terms[a] + " and " + terms[b];
        }
        std::vector<bool> used(spec.categories, false);
        std::string cats;
        const std::size_t want = n_categories(rng);
        for (std::size_t k = 0; k < want; ++k) {
            const auto c = category(rng);
            if (used[c]) continue;
            used[c] = true;
            if (!cats.empty()) cats += ",";
            cats += "Category " + std::to_string(c);
        }
        orgs << padded("org-", i) << ",Company " << i << ",\"" << description << ".\",\"" << cats << "\",";
        if (unlocated(rng)) {
            orgs << ",,\n";
        } else {
            orgs << lat(rng) << "," << lon(rng) << ",USA\n";
        }
    }

    std::ofstream rounds(dir / "funding_rounds.csv", std::ios::binary);
    rounds << "funding_round_uuid,investor_uuid,org_uuid,raised_amount_usd,announced_on\n";
    std::uniform_int_distribution<std::size_t> n_rounds(1, 3);
    std::uniform_int_distribution<std::size_t> investor(0, spec.investors - 1);
    std::lognormal_distribution<double> amount(14.0, 1.5);
    std::size_t round = 0;
    for (std::size_t i = 0; i < spec.organizations; ++i) {
        const std::size_t n = n_rounds(rng);
        for (std::size_t k = 0; k < n; ++k) {
            rounds << padded("round-", round++) << "," << padded("inv-", investor(rng)) << "," << padded("org-", i)
                   << "," << std::round(amount(rng)) << ",2019-0" << (1 + k) << "-15\n";
        }
    }

    std::ofstream config(dir / "config.json", std::ios::binary);
    config << R"({
  "organizations": "organizations.csv",
  "funding_rounds": "funding_rounds.csv",
  "sector": {"preset": "cybersecurity", "min_matches": 2},
  "preferences": {
    "companies": [{"feature": "previous_investments", "weight": 0.8},
                  {"feature": "location", "weight": 0.2}],
    "technologies": [{"feature": "previous_investments", "weight": 1.0}]
  },
  "investor_location": {"latitude": 40.71, "longitude": -74.01},
  "output_dir": "out",
  "seed": 7
}
)";
}

}  // namespace techrank::testing
