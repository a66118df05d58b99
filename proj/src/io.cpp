#include "belted/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace belted::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw PolytopeError(PolytopeErrorKind::Malformed, "malformed input: " + what);
}

}  // namespace

std::vector<Cycle> parse_json_facets(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array()) malformed("expected {\"facets\": [[...], ...]}");
  std::vector<Cycle> facets;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) malformed("facet is not an array");
    Cycle c;
    for (const auto& v : f) {
      if (!v.is_number_integer()) malformed("vertex id is not an integer");
      c.push_back(v.get<int>());
    }
    facets.push_back(std::move(c));
  }
  return facets;
}

namespace {

// Faces of a rotation system: the dart u -> v continues to v -> next(v, u),
// where next is the successor in v's neighbour list.
std::vector<Cycle> trace_faces(const std::vector<std::vector<int>>& rotation) {
  const int n = static_cast<int>(rotation.size());
  std::map<std::pair<int, int>, bool> used;
  auto succ = [&](int v, int u) {
    const auto& r = rotation[static_cast<std::size_t>(v)];
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] == u) return r[(k + 1) % r.size()];
    malformed("rotation system is not symmetric");
  };
  std::vector<Cycle> faces;
  for (int u = 0; u < n; ++u)
    for (int v : rotation[static_cast<std::size_t>(u)]) {
      if (used[{u, v}]) continue;
      Cycle face;
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        int c = succ(b, a);
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

}  // namespace

std::vector<Polytope> parse_planar_code_all(std::string_view source) {
  if (source.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader) malformed("missing >>planar_code<< header");
  std::size_t pos = kPlanarCodeHeader.size();
  auto byte = [&]() -> int {
    if (pos >= source.size()) malformed("truncated planar_code");
    return static_cast<unsigned char>(source[pos++]);
  };
  std::vector<Polytope> out;
  while (pos < source.size()) {
    int n = byte();
    // A zero count announces the two-byte format, which only matters past 255 vertices.
    if (n == 0) malformed("planar_code with more than 255 vertices is not supported");
    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      for (;;) {
        int w = byte();
        if (w == 0) break;
        if (w > n) malformed("neighbour index out of range");
        rotation[static_cast<std::size_t>(v)].push_back(w - 1);
      }
    out.emplace_back(trace_faces(rotation));
  }
  if (out.empty()) malformed("planar_code stream holds no graph");
  return out;
}

Polytope parse(std::string_view source, Format format) {
  if (format == Format::Json) return Polytope(parse_json_facets(source));
  auto all = parse_planar_code_all(source);
  return std::move(all.front());
}

Polytope parse_auto(std::string_view source) {
  bool planar = source.substr(0, kPlanarCodeHeader.size()) == kPlanarCodeHeader;
  return parse(source, planar ? Format::PlanarCode : Format::Json);
}

std::string to_json(const Polytope& p) {
  nlohmann::json doc;
  doc["facets"] = p.facets();
  return doc.dump();
}

std::string to_dot(const Polytope& p) {
  std::ostringstream os;
  os << "graph polytope {\n";
  for (int v = 0; v < p.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : p.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_planar_code(const Polytope& p) {
  if (p.vertex_count() > 255) throw std::invalid_argument("planar_code export supports at most 255 vertices");
  std::string out(kPlanarCodeHeader);
  out.push_back(static_cast<char>(p.vertex_count()));
  // Reading ..., u, v, w, ... along a facet means w follows u at v, which is
  // exactly the successor rule used when tracing faces on import.
  for (int v = 0; v < p.vertex_count(); ++v) {
    for (int w : p.neighbors(v)) out.push_back(static_cast<char>(w + 1));
    out.push_back('\0');
  }
  return out;
}

}  // namespace belted::io
