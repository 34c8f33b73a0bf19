#pragma once

// On-disk cache of filtered enumerations.
//
// File format (text, LF):
//   wpgap-cache v1 genus=<g> filter=<canonical-filter> count=<n>
//   <gap>,<gap>,...        one semigroup per line, ascending gaps
// The file ends with a newline. Writes go to a temporary file that is then
// renamed over the target, so readers never see a partial file.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpgap/semigroup.hpp"

namespace wpgap {

inline constexpr int kCacheFormatVersion = 1;

std::string serialize_cache(int genus, std::string_view filter, const std::vector<GapList>& lists);

/// nullopt when the text is malformed or its header does not match (genus, filter).
std::optional<std::vector<GapList>> parse_cache(std::string_view text, int genus,
                                                std::string_view filter);

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int genus,
                                      std::string_view filter);

/// Miss (nullopt) when the file is absent, unreadable, malformed or stale.
std::optional<std::vector<GapList>> load_cache(const std::filesystem::path& dir, int genus,
                                               std::string_view filter);

void store_cache(const std::filesystem::path& dir, int genus, std::string_view filter,
                 const std::vector<GapList>& lists);

}  // namespace wpgap
