#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bolloop/cayley_loop.hpp"
#include "bolloop/construct.hpp"
#include "bolloop/factorization.hpp"

namespace bolloop {

using Json = nlohmann::ordered_json;

/// Image array [p(0), ..., p(n-1)].
Json permutation_to_json(const Permutation& p);
/// Accepts an image array or a cycle string such as "(0 1 2)(3 4)".
/// Throws Error(MalformedInput).
Permutation permutation_from_json(const Json& value, std::size_t degree);

/// {"degree": n, "generators": [...]}
Json group_to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const Json& value);

/// {"X": group, "Y0": group, "Y1": group, "faithful": bool, "S": [[s1, s2], ...]}
/// "faithful" defaults to true; "S" is only present for folder fixtures.
struct TripleFile {
  ExactFactorizationTriple triple;
  std::optional<std::vector<PairElement>> section;
};
Json triple_to_json(const ExactFactorizationTriple& triple,
                    const std::vector<PairElement>* section = nullptr);
TripleFile triple_from_json(const Json& value);

/// {"order": n, "identity": 0, "labels": [...], "meta": {...}, "table": [[...], ...]}
struct LoopFile {
  CayleyLoop loop;
  Json meta;
};
std::string loop_to_json_text(const CayleyLoop& loop, const Json& meta);
LoopFile loop_from_json(const Json& value);

/// One line per row, entries shifted to 1, ..., n.
std::string loop_to_csv(const CayleyLoop& loop);
CayleyLoop loop_from_csv(std::string_view text);

/// File helpers raising Error(Io) on filesystem failures and
/// Error(MalformedInput) on unparsable JSON.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
Json read_json_file(const std::filesystem::path& path);

}  // namespace bolloop
