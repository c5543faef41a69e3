#include "frl/complex_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace frl {

using nlohmann::json;

std::string to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (Face f : complex.facets()) facets.push_back(f.vertices());
  json doc;
  doc["m"] = complex.num_vertices();
  doc["facets"] = std::move(facets);
  return doc.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("facets") ||
      !doc["m"].is_number_integer() || !doc["facets"].is_array()) {
    throw ParseError(R"(complex JSON must look like {"m": int, "facets": [[int, ...], ...]})");
  }
  std::vector<std::vector<int>> facets;
  for (const auto& facet : doc["facets"]) {
    if (!facet.is_array()) throw ParseError("complex JSON: facet is not an array");
    std::vector<int> vertices;
    for (const auto& v : facet) {
      if (!v.is_number_integer()) throw ParseError("complex JSON: vertex is not an integer");
      vertices.push_back(v.get<int>());
    }
    facets.push_back(std::move(vertices));
  }
  try {
    return SimplicialComplex::from_facets(doc["m"].get<int>(), facets);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_text(const SimplicialComplex& complex) {
  std::ostringstream out;
  out << complex.num_vertices() << '\n';
  for (Face f : complex.facets()) {
    bool first = true;
    for (int v : f.vertices()) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

SimplicialComplex complex_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int m = -1;
  std::vector<std::vector<int>> facets;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<int> values;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("complex text: bad integer '" + token + "'");
      }
    }
    if (m < 0) {
      if (values.empty()) continue;
      if (values.size() != 1) throw ParseError("complex text: first line must hold m only");
      m = values[0];
      continue;
    }
    facets.push_back(std::move(values));
  }
  if (m < 0) throw ParseError("complex text: missing vertex count");
  try {
    return SimplicialComplex::from_facets(m, facets);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SimplicialComplex parse_complex(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return complex_from_json(text);
  return complex_from_text(text);
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str());
}

}  // namespace frl
