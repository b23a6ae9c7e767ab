// Batch verification over a (q, m, n) grid.

#ifndef SYMRES_TOOLS_SUITES_HPP
#define SYMRES_TOOLS_SUITES_HPP

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace symres::cli {

inline const std::vector<std::string> kAllSuites = {"identities", "symbolic-oracle", "rho",      "alpha-gamma", "hh",
                                                    "chudnovsky", "regularity",      "transfer", "bh"};

struct RunConfig {
    std::vector<int> q_list;
    std::vector<int> m_list;
    int n_max = 8;
    std::set<std::string> suites;
    bool oracle = false;
    std::optional<int> rho_cap;
};

struct Record {
    int q = 0;
    int m = 0;
    std::optional<int> n;
    std::string check_id;
    std::string computed;
    std::string closed_form;
    bool match = false;
    std::optional<std::string> witness;
    double runtime_ms = 0;
};

struct ConfigError {
    std::string message;
};

/// Expands "all" and checks names; returns an error for unknown suites.
std::optional<ConfigError> resolve_suites(const std::vector<std::string>& names, std::set<std::string>& out);

/// Valid (q, m) pairs in lexicographic order. Invalid pairs are described on
/// `notes` and skipped.
std::vector<std::pair<int, int>> grid(const RunConfig& config, std::ostream& notes);

/// Runs the selected suites. Records are ordered by (q, m, n), then by suite
/// order within a point. Progress and skipped work go to `notes`.
std::vector<Record> run(const RunConfig& config, std::ostream& notes);

} // namespace symres::cli

#endif
