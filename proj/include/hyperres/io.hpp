#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperres/family.hpp"

namespace hyperres {

/// Parses the text family format:
///
///     # comment
///     k n
///     1 2 3
///     1 2 4
///
/// Blank lines and '#' comments are ignored. Input starting with '{' is
/// read as {"k":int,"n":int,"edges":[[int,...],...]} instead. Throws
/// ParseError carrying the offending line.
KFamily parse_family(std::string_view text);

KFamily read_family_file(const std::filesystem::path& path);

/// Text format, one edge per line in ascending mask order.
std::string format_family(const KFamily& f);

nlohmann::json family_to_json(const KFamily& f);
KFamily family_from_json(const nlohmann::json& j);

nlohmann::json edge_to_json(Mask edge);
nlohmann::json edges_to_json(std::span<const Mask> edges);

}  // namespace hyperres
