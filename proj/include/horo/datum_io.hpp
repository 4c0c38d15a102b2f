#pragma once

// Reader for the plain-text root-datum format (see docs/datum_format.md).

#include "horo/rootlattice.hpp"

#include <string>
#include <string_view>

namespace horo {

/// Parses and validates. `source` only labels diagnostics.
/// Throws ParseError (with line) on malformed text, ValidationError on a
/// structurally broken datum.
RootDatum parse_datum(std::string_view text, const std::string& source = "<input>");

/// Reads `path` and forwards to parse_datum. Unreadable file -> ParseError, line 0.
RootDatum load_datum(const std::string& path);

/// Inverse of parse_datum, used to regenerate fixtures.
std::string format_datum(const RootDatum& datum);

}  // namespace horo
