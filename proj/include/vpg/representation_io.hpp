#pragma once

#include <string>
#include <string_view>

#include "vpg/representation.hpp"

namespace vpg {

/// Parses the canonical representation document. Throws ParseError on
/// malformed JSON or wrong field types and InvariantError when the decoded
/// representation breaks a model invariant.
GridRep parse_representation(std::string_view text);

/// Canonical form: keys in fixed order, two-space indent, one path per line,
/// trailing newline.
std::string serialize_representation(const GridRep& r);

GridRep read_representation_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace vpg
