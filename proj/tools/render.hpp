#ifndef SYMRES_TOOLS_RENDER_HPP
#define SYMRES_TOOLS_RENDER_HPP

#include "suites.hpp"

#include <string>
#include <vector>

namespace symres::cli {

/// JSON array of objects with keys q, m, n, check_id, computed, closed_form,
/// match, witness, runtime_ms; n and witness are omitted when absent.
std::string render_json(const std::vector<Record>& records, bool with_runtime = true);

/// CSV with the same columns and a header line; empty cells for absent values.
std::string render_csv(const std::vector<Record>& records, bool with_runtime = true);

} // namespace symres::cli

#endif
