#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reebcz/geometry.hpp"
#include "reebcz/identity.hpp"
#include "reebcz/params.hpp"

namespace reebcz {

struct RunConfig {
    int n                = 2;
    std::string eps_text = "auto"; // "p/q" or "auto"
    long long n_max      = 100;
    int degree_max       = 41;
    int samples          = 1000;
    std::uint64_t seed   = 0;
    Tolerances tol;
    std::string format = "md"; // md | csv | json
    Rational a1{1};
    Rational a2{1001, 1000};

    // Parses eps_text, or certifies the smallest admissible eps when "auto".
    Rational resolve_eps() const;
};

// Aggregate of one identity over all sampled points. For residual_below
// checks `worst` is the largest residual seen; for magnitude_above checks
// it is the smallest magnitude seen.
struct IdentitySummary {
    std::string name;
    int samples      = 0;
    double worst     = 0.0;
    double threshold = 0.0;
    CheckMode mode   = CheckMode::residual_below;
    bool report_only = false;
    bool pass        = true;
    int failures     = 0;
};

struct VerificationReport {
    int n = 2;
    Rational eps;
    int samples        = 0;
    std::uint64_t seed = 0;
    std::vector<IdentitySummary> identities;
    bool all_asserted_pass = true;

    const IdentitySummary* find(const std::string& name) const;
};

// Runs every identity sweep of the geometric verification suite at
// config.samples seeded points. Asserted identities decide
// all_asserted_pass; report-only entries (the Gram-basis xi pairing and the
// radial-field tangency defect) are recorded but never fail.
VerificationReport run_verification(const RunConfig& config);

} // namespace reebcz
