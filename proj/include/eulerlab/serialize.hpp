#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "eulerlab/mpoly.hpp"

namespace eulerlab {

/// Canonical JSON: {"vars":[...],"terms":[{"e":[...],"n":"..","d":".."}]}
/// with terms in ascending lexicographic exponent order and no whitespace.
/// Equal polynomials serialize to identical bytes.
std::string to_canonical_json(const MPoly& f);
/// Accepts any JSON with that schema (term order and whitespace are free).
MPoly from_canonical_json(std::string_view text);

/// Writes canonical JSON plus a trailing newline. Errors carry the path.
void write_fixture(const std::filesystem::path& path, const MPoly& f);
MPoly read_fixture(const std::filesystem::path& path);

}  // namespace eulerlab
