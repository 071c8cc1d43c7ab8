#include "reebcz/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace reebcz {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json config_json(const RunConfig& config, const Rational& eps_used) {
    return json{{"n", config.n},
                {"eps", format_rational(eps_used)},
                {"n_max", config.n_max},
                {"degree_max", config.degree_max},
                {"samples", config.samples},
                {"seed", config.seed},
                {"a1", format_rational(config.a1)},
                {"a2", format_rational(config.a2)},
                {"tolerances",
                 {{"identity", config.tol.identity},
                  {"on_link", config.tol.on_link},
                  {"fd", config.tol.fd},
                  {"volume", config.tol.volume},
                  {"ode", config.tol.ode}}}};
}

json rank_table_json(const RankTable& table) {
    json ranks       = json::object();
    json generators  = json::object();
    for (const auto& [degree, rank] : table.ranks) {
        ranks[std::to_string(degree)] = rank;
        json list                     = json::array();
        for (const auto& g : table.generators.at(degree)) {
            list.push_back(json::array({g.family, g.N}));
        }
        generators[std::to_string(degree)] = list;
    }
    return json{{"degree_max", table.degree_max},
                {"ranks", ranks},
                {"generators", generators},
                {"lacunary", table.lacunary},
                {"contractible_min_index", table.contractible_min_index}};
}

std::string rank_table_md(const RankTable& table) {
    std::ostringstream out;
    out << "degree  rank  generators\n";
    for (const auto& [degree, rank] : table.ranks) {
        char head[40];
        std::snprintf(head, sizeof(head), "%6d  %4d  ", degree, rank);
        out << head;
        bool first = true;
        for (const auto& g : table.generators.at(degree)) {
            out << (first ? "" : " ") << g.family << "^" << g.N;
            first = false;
        }
        out << "\n";
    }
    out << "lacunary: " << (table.lacunary ? "yes" : "no") << "\n";
    out << "contractible_min_index: " << table.contractible_min_index << "\n";
    return out.str();
}

} // namespace

std::string render_cz_table(const std::vector<CzTableRow>& rows, const RunConfig& config,
                            const Rational& eps_used) {
    if (config.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows) {
            json jr{{"family", family_name(r.family)},
                    {"N", r.N},
                    {"mu_crossing", r.mu_crossing},
                    {"mu_closed", r.mu_closed},
                    {"homotopy_class", r.homotopy_class},
                    {"contractible", r.contractible}};
            if (r.has_simplified) {
                jr["mu_simplified"] = r.mu_simplified;
            } else {
                jr["mu_simplified"] = nullptr;
            }
            jrows.push_back(jr);
        }
        return json{{"schema", 1},
                    {"command", "cz-table"},
                    {"config", config_json(config, eps_used)},
                    {"rows", jrows}}
                   .dump(2) +
               "\n";
    }

    std::ostringstream out;
    if (config.format == "csv") {
        out << "family,N,mu_crossing,mu_closed,mu_simplified,homotopy_class,contractible\n";
        for (const auto& r : rows) {
            out << family_name(r.family) << "," << r.N << "," << r.mu_crossing << ","
                << r.mu_closed << ",";
            if (r.has_simplified) {
                out << r.mu_simplified;
            }
            out << "," << r.homotopy_class << "," << (r.contractible ? "true" : "false")
                << "\n";
        }
        return out.str();
    }

    out << "family   N  mu_crossing  mu_closed  mu_simplified  class  contractible\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-6s %3lld  %11lld  %9lld  %13s  %5d  %s\n",
                      family_name(r.family), r.N, r.mu_crossing, r.mu_closed,
                      r.has_simplified ? std::to_string(r.mu_simplified).c_str() : "-",
                      r.homotopy_class, r.contractible ? "yes" : "no");
        out << line;
    }
    return out.str();
}

std::string render_rank_table(const RankTable& table, const RunConfig& config,
                              const Rational& eps_used, bool pattern_ok) {
    if (config.format == "json") {
        return json{{"schema", 1},
                    {"command", "sh-ranks"},
                    {"config", config_json(config, eps_used)},
                    {"table", rank_table_json(table)},
                    {"pattern_ok", pattern_ok},
                    {"conjugacy_classes", conjugacy_class_count(config.n)}}
                   .dump(2) +
               "\n";
    }
    if (config.format == "csv") {
        std::ostringstream out;
        out << "degree,rank\n";
        for (const auto& [degree, rank] : table.ranks) {
            out << degree << "," << rank << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << rank_table_md(table);
    out << "pattern (rank n at degree 1, n+1 at odd degrees >= 3): "
        << (pattern_ok ? "ok" : "MISMATCH") << "\n";
    return out.str();
}

std::string render_verification(const VerificationReport& report, const RunConfig& config) {
    if (config.format == "json") {
        json identities = json::array();
        for (const auto& s : report.identities) {
            identities.push_back(
                {{"name", s.name},
                 {"samples", s.samples},
                 {"worst", s.worst},
                 {"threshold", s.report_only ? json(nullptr) : json(s.threshold)},
                 {"mode", s.mode == CheckMode::residual_below ? "residual_below"
                                                              : "magnitude_above"},
                 {"report_only", s.report_only},
                 {"pass", s.report_only ? json(nullptr) : json(s.pass)},
                 {"failures", s.failures}});
        }
        return json{{"schema", 1},
                    {"command", "verify"},
                    {"config", config_json(config, report.eps)},
                    {"identities", identities},
                    {"all_asserted_pass", report.all_asserted_pass}}
                   .dump(2) +
               "\n";
    }
    if (config.format == "csv") {
        std::ostringstream out;
        out << "identity,samples,worst,threshold,mode,report_only,pass,failures\n";
        for (const auto& s : report.identities) {
            out << s.name << "," << s.samples << "," << fmt_double(s.worst) << ","
                << (s.report_only ? "" : fmt_double(s.threshold)) << ","
                << (s.mode == CheckMode::residual_below ? "residual_below"
                                                        : "magnitude_above")
                << "," << (s.report_only ? "true" : "false") << ","
                << (s.report_only ? "" : (s.pass ? "true" : "false")) << "," << s.failures
                << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "identity                           samples        worst    threshold  status\n";
    for (const auto& s : report.identities) {
        char line[200];
        std::snprintf(line, sizeof(line), "%-34s %7d  %11s  %11s  %s\n", s.name.c_str(),
                      s.samples, fmt_double(s.worst).c_str(),
                      s.report_only ? "-" : fmt_double(s.threshold).c_str(),
                      s.report_only ? "report" : (s.pass ? "pass" : "FAIL"));
        out << line;
    }
    out << "all asserted identities pass: " << (report.all_asserted_pass ? "yes" : "NO")
        << "\n";
    return out.str();
}

std::string render_lens_compare(const RankTable& link_table, const RankTable& lens_table,
                                bool equal, const Rational& admissible_delta,
                                const RunConfig& config, const Rational& eps_used) {
    if (config.format == "json") {
        return json{{"schema", 1},
                    {"command", "lens-compare"},
                    {"config", config_json(config, eps_used)},
                    {"link_table", rank_table_json(link_table)},
                    {"lens_table", rank_table_json(lens_table)},
                    {"equal", equal},
                    {"empirical_admissible_delta", format_rational(admissible_delta)}}
                   .dump(2) +
               "\n";
    }
    if (config.format == "csv") {
        std::ostringstream out;
        out << "degree,link_rank,lens_rank\n";
        for (int d = 0; d <= link_table.degree_max; ++d) {
            const int lr = table_rank(link_table, d);
            const int qr = table_rank(lens_table, d);
            if (lr != 0 || qr != 0) {
                out << d << "," << lr << "," << qr << "\n";
            }
        }
        out << "equal," << (equal ? "true" : "false") << ",\n";
        return out.str();
    }
    std::ostringstream out;
    out << "link table (A_n link):\n" << rank_table_md(link_table);
    out << "\nlens table (L(n+1,n)):\n" << rank_table_md(lens_table);
    out << "\nequal: " << (equal ? "yes" : "NO") << "\n";
    out << "empirical admissible delta (a2/a1 - 1 at this degree window): "
        << format_rational(admissible_delta) << "\n";
    return out.str();
}

} // namespace reebcz
