#include "mla/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace mla {
namespace {

using nlohmann::json;

std::vector<Elem> read_matrix(const json& doc, const char* key, int n, const std::string& src) {
  if (!doc.contains(key)) throw ParseError(fmt::format("{}: missing field '{}'", src, key));
  const json& m = doc.at(key);
  if (!m.is_array() || static_cast<int>(m.size()) != n)
    throw ParseError(fmt::format("{}: field '{}' must be an array of {} rows", src, key, n));
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    const json& row = m[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(fmt::format("{}: {}[{}] must have {} entries, found {}", src, key, r, n,
                                   row.is_array() ? std::to_string(row.size()) : "a non-array"));
    for (int c = 0; c < n; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number_integer())
        throw ParseError(fmt::format("{}: {}[{}][{}] is not an integer", src, key, r, c));
      const auto x = v.get<long long>();
      if (x < 0 || x >= n)
        throw ParseError(fmt::format("{}: {}[{}][{}] = {} is outside [0, {})", src, key, r, c, x, n));
      out.push_back(static_cast<Elem>(x));
    }
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text, const std::string& src) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(fmt::format("{}:{}:{}: malformed JSON", src, line, col));
  }
  if (!doc.is_object()) throw ParseError(src + ": expected a JSON object");
  AlgebraFile f;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(src + ": field 'name' must be a string");
    f.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer())
    throw ParseError(src + ": field 'order' must be a positive integer");
  const auto order = doc["order"].get<long long>();
  if (order < 1 || order > 1'000'000) throw ParseError(src + ": field 'order' must be a positive integer");
  f.order = static_cast<int>(order);
  if (doc.contains("identity")) {
    if (!doc["identity"].is_number_integer()) throw ParseError(src + ": field 'identity' must be an integer");
    const auto id = doc["identity"].get<long long>();
    if (id < 0 || id >= order) throw ParseError(src + ": field 'identity' is outside [0, order)");
    f.identity = static_cast<Elem>(id);
  }
  f.mul = read_matrix(doc, "mul", f.order, src);
  f.star = read_matrix(doc, "star", f.order, src);
  if (doc.contains("elements")) {
    const json& e = doc["elements"];
    if (!e.is_array() || static_cast<int>(e.size()) != f.order)
      throw ParseError(fmt::format("{}: field 'elements' must list {} names", src, f.order));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i].is_string()) throw ParseError(fmt::format("{}: elements[{}] is not a string", src, i));
      f.elements.push_back(e[i].get<std::string>());
    }
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("{}: cannot open file", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str(), path);
}

AlgebraPtr to_algebra(const AlgebraFile& f, const AlgebraLimits& limits) {
  return share(MultLieAlgebra::from_tables(f.mul, f.star, f.identity, f.elements, f.name, limits));
}

AlgebraFile to_file(const MultLieAlgebra& a, const std::string& name) {
  AlgebraFile f;
  f.name = name;
  f.order = a.order();
  f.identity = kIdentity;
  f.mul.assign(a.mul_table().begin(), a.mul_table().end());
  f.star.assign(a.star_table().begin(), a.star_table().end());
  f.elements = a.names();
  return f;
}

std::string to_json_text(const AlgebraFile& f) {
  // One matrix row per line keeps the files readable.
  auto row = [&](const std::vector<Elem>& m, int r) {
    json j = json::array();
    for (int c = 0; c < f.order; ++c) j.push_back(m[static_cast<std::size_t>(r * f.order + c)]);
    return j.dump();
  };
  std::string out = "{\n";
  out += fmt::format("  \"name\": {},\n", json(f.name).dump());
  out += fmt::format("  \"order\": {},\n", f.order);
  out += fmt::format("  \"identity\": {},\n", f.identity);
  if (!f.elements.empty()) out += fmt::format("  \"elements\": {},\n", json(f.elements).dump());
  for (const auto* key : {"mul", "star"}) {
    const auto& m = std::string(key) == "mul" ? f.mul : f.star;
    out += fmt::format("  \"{}\": [\n", key);
    for (int r = 0; r < f.order; ++r)
      out += fmt::format("    {}{}\n", row(m, r), r + 1 < f.order ? "," : "");
    out += std::string("  ]") + (std::string(key) == "mul" ? ",\n" : "\n");
  }
  out += "}\n";
  return out;
}

}  // namespace mla
