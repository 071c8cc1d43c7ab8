#include "reebcz/ranks.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "reebcz/errors.hpp"

namespace reebcz {

int table_rank(const RankTable& table, int degree) {
    const auto it = table.ranks.find(degree);
    return it == table.ranks.end() ? 0 : it->second;
}

bool tables_have_equal_ranks(const RankTable& a, const RankTable& b) {
    return a.degree_max == b.degree_max && a.ranks == b.ranks;
}

namespace {

void scan_lacunarity(RankTable& table) {
    std::set<int> degrees;
    for (const auto& [degree, rank] : table.ranks) {
        if (rank > 0) {
            degrees.insert(degree);
        }
    }
    table.lacunary = true;
    for (const int d : degrees) {
        if (degrees.count(d + 1)) {
            table.lacunary = false;
            return;
        }
    }
}

} // namespace

RankTable tally_ranks(const LinkParams& params, int degree_max) {
    if (degree_max < 1) {
        throw domain_error("tally_ranks: degree_max must be >= 1");
    }
    RankTable table;
    table.degree_max = degree_max;

    for (const OrbitFamily family : {OrbitFamily::minus, OrbitFamily::plus}) {
        long long previous = 0;
        for (long long N = 1;; ++N) {
            const long long mu = cz_link_closed_form(params, family, N);
            if (mu < previous) {
                throw internal_error("tally_ranks: index not monotone at gamma_" +
                                     std::string(family_name(family)) + "^" +
                                     std::to_string(N));
            }
            previous = mu;
            if (mu > degree_max) {
                break; // monotone in N, so no later iterate fits the window
            }
            const int degree = static_cast<int>(mu);
            table.ranks[degree] += 1;
            table.generators[degree].push_back(Generator{family_name(family), N});
            if (N % (params.n + 1) == 0) {
                if (table.contractible_min_index < 0 || mu < table.contractible_min_index) {
                    table.contractible_min_index = mu;
                }
            }
        }
    }

    scan_lacunarity(table);
    return table;
}

bool check_thm_pattern(const RankTable& table, int n) {
    if (!table.lacunary) {
        throw certificate_error(
            "check_thm_pattern: table lacks the lacunarity certificate; the tally cannot be "
            "read as homology ranks");
    }
    for (int d = 0; d <= table.degree_max; ++d) {
        const int expected = d == 1 ? n : (d >= 3 && d % 2 == 1 ? n + 1 : 0);
        if (table_rank(table, d) != expected) {
            return false;
        }
    }
    return true;
}

long long conjugacy_class_count(int n) {
    if (n < 1) {
        throw domain_error("conjugacy_class_count: n must be >= 1");
    }
    return n + 1; // cyclic, hence abelian: every element is its own class
}

} // namespace reebcz
