#pragma once

// Named batches of exact identity checks, shared by the CLI and the Python module.

#include <span>
#include <string_view>

#include "sce/report.hpp"

namespace sce {

/// routes, recurrences, odes, genfunc, laguerre, theorem1, theorem2, all
std::span<const std::string_view> suite_names();

/// Runs one suite for indices (or series orders) 0..max_n. Throws
/// std::invalid_argument for an unknown suite name or negative max_n.
Report run_suite(std::string_view suite, int max_n);

}  // namespace sce
