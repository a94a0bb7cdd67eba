#include "psp/io/envelope_io.hpp"

#include <fstream>
#include <sstream>

#include "psp/errors.hpp"

namespace psp::io {
namespace {

using Json = nlohmann::ordered_json;

Rational rational_field(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw ParseError(0, std::string("missing rational field '") + key + "'");
  }
  const auto& text = obj[key].get_ref<const std::string&>();
  if (text.find('/') == std::string::npos) {
    throw ParseError(0, std::string("field '") + key + "' is not of the form p/q: " + text);
  }
  Rational value = Rational::parse(text);
  if (value.str() != text) {
    throw ParseError(0, std::string("field '") + key + "' is not in lowest terms: " + text);
  }
  return value;
}

std::uint32_t id_value(const Json& v, const char* what) {
  if (!v.is_number_unsigned()) throw ParseError(0, std::string("bad ") + what + " id");
  const auto raw = v.get<std::uint64_t>();
  if (raw > UINT32_MAX) throw ParseError(0, std::string(what) + " id too large");
  return static_cast<std::uint32_t>(raw);
}

}  // namespace

Json envelope_to_json(const ShortestPathIndex& index) {
  Json segments = Json::array();
  for (const auto& seg : index.segments()) {
    Json vertices = Json::array();
    for (VertexId v : seg.vertices) vertices.push_back(v.index);
    Json edges = Json::array();
    for (EdgeId e : seg.path.edges()) edges.push_back(e.index);
    segments.push_back(Json{{"lo", seg.lo.str()},
                            {"hi", seg.hi.str()},
                            {"c0", seg.line.c0.str()},
                            {"c1", seg.line.c1.str()},
                            {"vertices", std::move(vertices)},
                            {"edges", std::move(edges)}});
  }
  return Json{{"format", kEnvelopeFormat},
              {"source", index.source().index},
              {"target", index.target().index},
              {"k", index.k()},
              {"segments", std::move(segments)}};
}

ShortestPathIndex envelope_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError(0, "envelope document is not an object");
  if (!doc.contains("format") || doc["format"] != kEnvelopeFormat) {
    throw ParseError(0, "unsupported or missing envelope format (expected 1)");
  }
  for (const char* key : {"source", "target", "k", "segments"}) {
    if (!doc.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  }
  const VertexId source{id_value(doc["source"], "source")};
  const VertexId target{id_value(doc["target"], "target")};
  const Json& segs = doc["segments"];
  if (!segs.is_array()) throw ParseError(0, "'segments' is not an array");
  if (!doc["k"].is_number_unsigned() || doc["k"].get<std::size_t>() != segs.size()) {
    throw ParseError(0, "'k' does not match the number of segments");
  }

  std::vector<EnvelopeSegment> segments;
  for (const Json& s : segs) {
    if (!s.is_object() || !s.contains("vertices") || !s["vertices"].is_array()) {
      throw ParseError(0, "segment without a 'vertices' array");
    }
    EnvelopeSegment seg;
    seg.lo = rational_field(s, "lo");
    seg.hi = rational_field(s, "hi");
    seg.line = CostLine{rational_field(s, "c0"), rational_field(s, "c1")};
    for (const Json& v : s["vertices"]) seg.vertices.push_back(VertexId{id_value(v, "vertex")});
    if (s.contains("edges")) {
      if (!s["edges"].is_array()) throw ParseError(0, "'edges' is not an array");
      std::vector<EdgeId> edges;
      for (const Json& e : s["edges"]) edges.push_back(EdgeId{id_value(e, "edge")});
      if (edges.size() + 1 != seg.vertices.size()) {
        throw ParseError(0, "'edges' and 'vertices' lengths disagree");
      }
      seg.path = Path(std::move(edges));
    }
    if (seg.vertices.empty() || seg.vertices.front() != source || seg.vertices.back() != target) {
      throw ParseError(0, "segment path does not run from source to target");
    }
    segments.push_back(std::move(seg));
  }
  return ShortestPathIndex(source, target, std::move(segments));
}

void write_envelope(std::ostream& out, const ShortestPathIndex& index) {
  out << envelope_to_json(index).dump(2) << '\n';
}

std::string envelope_to_string(const ShortestPathIndex& index) {
  std::ostringstream ss;
  write_envelope(ss, index);
  return ss.str();
}

ShortestPathIndex read_envelope(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    return envelope_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed envelope: ") + e.what());
  }
}

void write_envelope_file(const std::filesystem::path& path, const ShortestPathIndex& index) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_envelope(out, index);
}

ShortestPathIndex read_envelope_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_envelope(in);
}

}  // namespace psp::io
