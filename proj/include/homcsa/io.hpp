#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "homcsa/bialg.hpp"

namespace homcsa::io {

using json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with "line L, column C".
json parse_json(std::string_view text, const std::string& source = "<input>");

/// Pretty form used for every file we write: sorted keys, two-space indent,
/// trailing newline.
std::string to_text(const json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
std::string sha256_hex(std::string_view bytes);

// Structure <-> JSON. Readers take the JSON path of the value for error
// messages and reject unknown keys.
json to_json(const Scalar& s);
json to_json(const LinearMap& m);
json to_json(const BilinearTensor& t);
json to_json(const ActionTensor& a);
json to_json(const HomAlgebra& A, const std::optional<std::string>& name = std::nullopt);
json to_json(const Representation& R);
json to_json(const Bimodule& B);
json to_json(const MatchedPairCSA& M);
json to_json(const MatchedPairHomLie& M);
json to_json(const PairedAlgebras& P);

HomAlgebra algebra_from_json(const json& j, const std::string& path = "$");
Representation representation_from_json(const json& j, const std::string& path = "$");
Bimodule bimodule_from_json(const json& j, const std::string& path = "$");
MatchedPairCSA matched_pair_from_json(const json& j, const std::string& path = "$");
MatchedPairHomLie lie_pair_from_json(const json& j, const std::string& path = "$");
PairedAlgebras bialgebra_from_json(const json& j, const std::string& path = "$");

/// The "name" member of an algebra document, if present.
std::optional<std::string> algebra_name(const json& j);

enum class FileKind { Algebra, Representation, Bimodule, MatchedPair, LiePair, Bialgebra };

/// Guesses the document kind from its top-level keys; throws InputError when
/// nothing matches.
FileKind detect_kind(const json& j);
const char* kind_name(FileKind k);

HomAlgebra parse_algebra(std::string_view text);
std::string serialize_algebra(const HomAlgebra& A, const std::optional<std::string>& name = std::nullopt);

}  // namespace homcsa::io
