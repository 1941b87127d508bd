#include "semideg/serialize.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "semideg/error.hpp"

namespace semideg {

namespace {

std::string position_text(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

OrientedGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::kParseError, position_text(text, at) + ": malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs"))
    throw Error(ErrorCode::kParseError, "line 1, column 1: expected object with \"n\" and \"arcs\"");
  const auto& n_field = doc["n"];
  if (!n_field.is_number_unsigned())
    throw Error(ErrorCode::kParseError, "line 1, column 1: \"n\" must be a nonnegative integer");
  const auto n = n_field.get<std::size_t>();
  const auto& arcs_field = doc["arcs"];
  if (!arcs_field.is_array())
    throw Error(ErrorCode::kParseError, "line 1, column 1: \"arcs\" must be an array");
  GraphBuilder b(n);
  for (const auto& item : arcs_field) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned())
      throw Error(ErrorCode::kParseError, "line 1, column 1: each arc must be [u,v]");
    b.add_arc(item[0].get<std::size_t>(), item[1].get<std::size_t>());
  }
  return b.build();
}

OrientedGraph parse_dot(std::string_view text) {
  static const std::regex node_re(R"(^\s*v(\d+)\s*;?\s*$)");
  static const std::regex edge_re(R"(^\s*v(\d+)\s*->\s*v(\d+)\s*;?\s*$)");
  static const std::regex open_re(R"(^\s*digraph\s*\w*\s*\{\s*$)");
  static const std::regex close_re(R"(^\s*\}\s*$)");
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::vector<Arc> arcs;
  bool opened = false;
  bool closed = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::smatch m;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!opened) {
      if (!std::regex_match(line, open_re))
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ", column 1: expected `digraph {`");
      opened = true;
    } else if (closed) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ", column 1: content after closing brace");
    } else if (std::regex_match(line, m, edge_re)) {
      const Vertex u = std::stoul(m[1]);
      const Vertex v = std::stoul(m[2]);
      arcs.push_back({u, v});
      n = std::max({n, u + 1, v + 1});
    } else if (std::regex_match(line, m, node_re)) {
      n = std::max<std::size_t>(n, std::stoul(m[1]) + 1);
    } else if (std::regex_match(line, close_re)) {
      closed = true;
    } else {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ", column 1: unrecognised statement");
    }
  }
  if (!closed) throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": missing `}`");
  return OrientedGraph::from_arcs(n, arcs);
}

}  // namespace

std::string serialize(const OrientedGraph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::kJson) {
    out << "{\"n\":" << g.order() << ",\"arcs\":[";
    bool first = true;
    for (const Arc& a : g.arcs()) {
      if (!first) out << ',';
      first = false;
      out << '[' << a.tail << ',' << a.head << ']';
    }
    out << "]}";
    return out.str();
  }
  out << "digraph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  v" << v << ";\n";
  for (const Arc& a : g.arcs()) out << "  v" << a.tail << " -> v" << a.head << ";\n";
  out << "}\n";
  return out.str();
}

OrientedGraph parse_graph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text.substr(start, 7) == "digraph") return parse_dot(text);
  return parse_json(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

OrientedGraph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace semideg
