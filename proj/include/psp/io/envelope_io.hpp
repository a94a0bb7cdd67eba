#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "psp/envelope.hpp"

namespace psp::io {

inline constexpr int kEnvelopeFormat = 1;

/// {"format": 1, "source", "target", "k", "segments": [{"lo", "hi", "c0",
/// "c1", "vertices", "edges"}]}. Rationals are "p/q" strings in lowest terms.
nlohmann::ordered_json envelope_to_json(const ShortestPathIndex& index);

/// Throws ParseError for any schema violation, StructureError if the
/// segments do not tile [0, 1].
ShortestPathIndex envelope_from_json(const nlohmann::ordered_json& doc);

void write_envelope(std::ostream& out, const ShortestPathIndex& index);
std::string envelope_to_string(const ShortestPathIndex& index);
ShortestPathIndex read_envelope(std::istream& in);

void write_envelope_file(const std::filesystem::path& path, const ShortestPathIndex& index);
ShortestPathIndex read_envelope_file(const std::filesystem::path& path);

}  // namespace psp::io
