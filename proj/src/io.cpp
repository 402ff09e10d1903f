#include "hyperres/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyperres/error.hpp"

namespace hyperres {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool to_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

KFamily parse_json_family(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseErrorKind::kBadJson, 1, e.what());
  }
  return family_from_json(j);
}

}  // namespace

KFamily parse_family(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json_family(text);
  }

  int k = -1;
  int n = -1;
  std::vector<Mask> edges;
  std::unordered_map<Mask, int> edge_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (k < 0) {
      if (tokens.size() != 2 || !to_int(tokens[0], k) || !to_int(tokens[1], n)) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "expected header \"k n\"");
      }
      if (n < 1 || n > kMaxVertices || k < 1 || k > n) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "header needs 1 <= k <= n <= 64");
      }
      continue;
    }

    if (static_cast<int>(tokens.size()) != k) {
      throw ParseError(ParseErrorKind::kWrongArity, line_no,
                       "expected " + std::to_string(k) + " vertices, got " +
                           std::to_string(tokens.size()));
    }
    Mask edge = 0;
    for (auto tok : tokens) {
      int v = 0;
      if (!to_int(tok, v)) {
        throw ParseError(ParseErrorKind::kBadToken, line_no,
                         "not an integer: \"" + std::string(tok) + "\"");
      }
      if (v < 1 || v > n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "vertex " + std::to_string(v) + " outside 1.." +
                             std::to_string(n));
      }
      if ((edge & vertex_bit(v)) != 0) {
        throw ParseError(ParseErrorKind::kRepeatedVertex, line_no,
                         "vertex " + std::to_string(v) + " repeated in edge");
      }
      edge |= vertex_bit(v);
    }
    if (auto [it, fresh] = edge_lines.emplace(edge, line_no); !fresh) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                       "duplicate edge, first on line " +
                           std::to_string(it->second));
    }
    edges.push_back(edge);
  }
  if (k < 0) {
    throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                     "missing header \"k n\"");
  }
  return KFamily(k, n, std::move(edges));
}

KFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

std::string format_family(const KFamily& f) {
  std::string out = std::to_string(f.k()) + " " + std::to_string(f.n()) + "\n";
  for (Mask e : f.edges()) {
    bool first = true;
    for_each_vertex(e, [&](int v) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    });
    out += '\n';
  }
  return out;
}

nlohmann::json edge_to_json(Mask edge) {
  return nlohmann::json(mask_vertices(edge));
}

nlohmann::json edges_to_json(std::span<const Mask> edges) {
  auto arr = nlohmann::json::array();
  for (Mask e : edges) arr.push_back(edge_to_json(e));
  return arr;
}

nlohmann::json family_to_json(const KFamily& f) {
  return {{"k", f.k()}, {"n", f.n()}, {"edges", edges_to_json(f.edges())}};
}

KFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("n") ||
      !j.contains("edges") || !j["k"].is_number_integer() ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1,
                     "JSON family needs integer \"k\", \"n\" and array "
                     "\"edges\"");
  }
  const int k = j["k"].get<int>();
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxVertices || k < 0 || k > n) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1,
                     "JSON family needs 0 <= k <= n <= 64");
  }
  std::vector<Mask> edges;
  std::unordered_set<Mask> seen;
  int index = 0;
  for (const auto& e : j["edges"]) {
    ++index;
    if (!e.is_array() || static_cast<int>(e.size()) != k) {
      throw ParseError(ParseErrorKind::kWrongArity, index,
                       "edge " + std::to_string(index) + " is not a " +
                           std::to_string(k) + "-element array");
    }
    Mask edge = 0;
    for (const auto& v : e) {
      if (!v.is_number_integer()) {
        throw ParseError(ParseErrorKind::kBadToken, index,
                         "edge " + std::to_string(index) +
                             " has a non-integer vertex");
      }
      const int x = v.get<int>();
      if (x < 1 || x > n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, index,
                         "vertex " + std::to_string(x) + " outside 1.." +
                             std::to_string(n));
      }
      if ((edge & vertex_bit(x)) != 0) {
        throw ParseError(ParseErrorKind::kRepeatedVertex, index,
                         "vertex " + std::to_string(x) + " repeated in edge");
      }
      edge |= vertex_bit(x);
    }
    if (!seen.insert(edge).second) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, index,
                       "duplicate edge " + edge_to_string(edge));
    }
    edges.push_back(edge);
  }
  return KFamily(k, n, std::move(edges));
}

}  // namespace hyperres
