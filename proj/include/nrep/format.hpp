// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nrep {

/// 17 significant digits (round-trips exactly), '.' as decimal separator
/// regardless of locale.
std::string format_double(double value);

/// Shortest text that parses back to the same double.
std::string format_shortest(double value);

/// Whole-string parse; nullopt on trailing garbage or empty input.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);

}  // namespace nrep
