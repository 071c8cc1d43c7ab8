#pragma once

#include <string>
#include <vector>

#include "reebcz/cz.hpp"
#include "reebcz/ranks.hpp"
#include "reebcz/verify.hpp"

namespace reebcz {

// Renderers for the CLI. Every format is deterministic for a fixed config
// and seed; JSON carries a top-level "schema": 1 field.

std::string render_cz_table(const std::vector<CzTableRow>& rows, const RunConfig& config,
                            const Rational& eps_used);

std::string render_rank_table(const RankTable& table, const RunConfig& config,
                              const Rational& eps_used, bool pattern_ok);

std::string render_verification(const VerificationReport& report, const RunConfig& config);

std::string render_lens_compare(const RankTable& link_table, const RankTable& lens_table,
                                bool equal, const Rational& admissible_delta,
                                const RunConfig& config, const Rational& eps_used);

} // namespace reebcz
