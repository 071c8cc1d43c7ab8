#pragma once

#include <map>
#include <string>
#include <vector>

#include "reebcz/cz.hpp"
#include "reebcz/params.hpp"

namespace reebcz {

struct Generator {
    std::string family; // "plus" / "minus" or "gamma1" / "gamma2"
    long long N = 0;

    bool operator==(const Generator&) const = default;
};

// Graded tally of orbit iterates by Conley-Zehnder index over the degree
// window [0, degree_max]. The lacunarity certificate (no two consecutive
// indices occur) is what lets the tally be read as homology ranks: it
// forces the differential to vanish over Q.
struct RankTable {
    int degree_max = 0;
    std::map<int, int> ranks; // only nonzero degrees stored
    std::map<int, std::vector<Generator>> generators;
    bool lacunary                     = false;
    long long contractible_min_index  = -1; // -1: no contractible generator in range
};

int table_rank(const RankTable& table, int degree);

bool tables_have_equal_ranks(const RankTable& a, const RankTable& b);

// Enumerates gamma_{+-}^N for N = 1, 2, ... until the (monotone) index
// exceeds degree_max and bins by index. Throws degenerate_orbit_error on a
// resonant (family, N) and internal_error if monotonicity ever fails.
RankTable tally_ranks(const LinkParams& params, int degree_max);

// True iff the table shows rank n at degree 1, rank n+1 at every odd
// degree in [3, degree_max], and 0 elsewhere. Requires the lacunarity
// certificate (throws certificate_error otherwise).
bool check_thm_pattern(const RankTable& table, int n);

// Number of conjugacy classes of the order-(n+1) cyclic subgroup of
// SL(2,C): the group is abelian, so n+1.
long long conjugacy_class_count(int n);

} // namespace reebcz
