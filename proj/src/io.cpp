#include "geonet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geonet/error.hpp"

namespace geonet {

using json = nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(Errc::io_error, "write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::io_error, "read from '" + path.string() + "' failed");
  return ss.str();
}

std::string net_to_json(const EmbeddedNet& net) {
  const NetTopology& topo = net.topology();
  std::string out = "{\n  \"format_version\": " + std::to_string(kNetFormatVersion) + ",\n  \"vertices\": [";
  for (std::size_t v = 0; v < topo.vertex_count(); ++v) {
    const Point p = net.position(v);
    out += v == 0 ? "\n" : ",\n";
    out += "    {\"id\": " + json(topo.id(v)).dump() + ", \"pos\": [" + format_double(p.x) + ", " +
           format_double(p.y) + "], \"boundary\": " + (topo.is_boundary(v) ? "true" : "false") + "}";
  }
  out += "\n  ],\n  \"edges\": [";
  for (std::size_t e = 0; e < topo.edge_count(); ++e) {
    const Edge edge = topo.edge(e);
    out += e == 0 ? "\n" : ",\n";
    out += "    [" + json(edge.a).dump() + ", " + json(edge.b).dump() + "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

namespace {

[[noreturn]] void field_error(std::string_view source, const std::string& field, const std::string& what) {
  throw Error(Errc::parse_error, std::string(source) + ": field '" + field + "': " + what);
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

EmbeddedNet net_from_json(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    throw Error(Errc::parse_error, std::string(source) + ":" + std::to_string(line) + ":" +
                                       std::to_string(col) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) field_error(source, "<root>", "expected an object");

  const auto version = doc.find("format_version");
  if (version == doc.end() || !version->is_number_integer()) {
    field_error(source, "format_version", "missing or not an integer");
  }
  if (version->get<long long>() != kNetFormatVersion) {
    field_error(source, "format_version",
                "unsupported version " + version->dump() + " (expected " + std::to_string(kNetFormatVersion) + ")");
  }

  const auto verts = doc.find("vertices");
  if (verts == doc.end() || !verts->is_array()) field_error(source, "vertices", "missing or not an array");
  std::vector<VertexSpec> specs;
  PointMap pos;
  for (std::size_t k = 0; k < verts->size(); ++k) {
    const json& v = (*verts)[k];
    const std::string at = "vertices[" + std::to_string(k) + "]";
    if (!v.is_object()) field_error(source, at, "expected an object");
    const auto id = v.find("id");
    if (id == v.end() || !id->is_string()) field_error(source, at + ".id", "missing or not a string");
    const auto p = v.find("pos");
    if (p == v.end() || !p->is_array() || p->size() != 2 || !(*p)[0].is_number() || !(*p)[1].is_number()) {
      field_error(source, at + ".pos", "expected [x, y] numbers");
    }
    const auto b = v.find("boundary");
    if (b == v.end() || !b->is_boolean()) field_error(source, at + ".boundary", "missing or not a boolean");
    const std::string name = id->get<std::string>();
    if (pos.count(name)) {
      throw Error(Errc::invariant_violation, std::string(source) + ": duplicate vertex id '" + name + "'");
    }
    specs.push_back({name, b->get<bool>() ? VertexKind::boundary : VertexKind::interior});
    pos[name] = {(*p)[0].get<double>(), (*p)[1].get<double>()};
  }

  const auto edges = doc.find("edges");
  if (edges == doc.end() || !edges->is_array()) field_error(source, "edges", "missing or not an array");
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges->size(); ++k) {
    const json& e = (*edges)[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      field_error(source, "edges[" + std::to_string(k) + "]", "expected [idA, idB] strings");
    }
    list.push_back(make_edge(e[0].get<std::string>(), e[1].get<std::string>()));
  }
  return EmbeddedNet(NetTopology(std::move(specs), std::move(list)), pos);
}

void save_net(const EmbeddedNet& net, const std::filesystem::path& path) {
  write_text(path, net_to_json(net));
}

EmbeddedNet load_net(const std::filesystem::path& path) {
  return net_from_json(read_text(path), path.string());
}

}  // namespace geonet
