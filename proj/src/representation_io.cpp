#include "vpg/representation_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vpg/errors.hpp"

namespace vpg {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t coordinate(const json& v) {
  if (!v.is_number_integer()) throw ParseError("coordinate is not an integer: " + v.dump());
  return v.get<std::int64_t>();
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

GridRep parse_representation(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document is not an object");

  const json& step = field(doc, "grid_step");
  if (!step.is_string()) throw ParseError("grid_step must be a string rational");
  const Rational grid_step = Rational::parse(step.get<std::string>());

  const json& flavor_field = field(doc, "flavor");
  if (!flavor_field.is_string()) throw ParseError("flavor must be a string");
  const auto flavor_name = flavor_field.get<std::string>();
  Flavor flavor;
  if (flavor_name == "VPG") {
    flavor = Flavor::VPG;
  } else if (flavor_name == "CPG") {
    flavor = Flavor::CPG;
  } else {
    throw ParseError("unknown flavor '" + flavor_name + "'");
  }

  const json& list = field(doc, "paths");
  if (!list.is_array()) throw ParseError("paths must be an array");
  std::vector<GridPath> paths;
  paths.reserve(list.size());
  for (const auto& entry : list) {
    if (!entry.is_object()) throw ParseError("path entry is not an object");
    const json& id = field(entry, "id");
    if (!id.is_string()) throw ParseError("path id must be a string");
    const json& pts = field(entry, "points");
    if (!pts.is_array()) throw ParseError("points must be an array");
    std::vector<GridPoint> points;
    points.reserve(pts.size());
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2) throw ParseError("point must be an [x, y] pair");
      points.push_back({coordinate(p[0]), coordinate(p[1])});
    }
    paths.emplace_back(id.get<std::string>(), std::move(points));
  }
  return GridRep(grid_step, flavor, std::move(paths));
}

std::string serialize_representation(const GridRep& r) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"grid_step\": " << quoted(r.grid_step().str()) << ",\n";
  out << "  \"flavor\": " << quoted(to_string(r.flavor())) << ",\n";
  if (r.empty()) {
    out << "  \"paths\": []\n}\n";
    return out.str();
  }
  out << "  \"paths\": [\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& p = r.path(i);
    out << "    {\"id\": " << quoted(p.id()) << ", \"points\": [";
    const auto pts = p.points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j) out << ", ";
      out << '[' << pts[j].x << ", " << pts[j].y << ']';
    }
    out << "]}" << (i + 1 < r.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

GridRep read_representation_file(const std::string& path) {
  return parse_representation(read_text_file(path));
}

}  // namespace vpg
