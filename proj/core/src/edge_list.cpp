#include "spectral_entropy/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spectral_entropy/error.hpp"

namespace spectral_entropy {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string trailing;
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(fields >> tag >> count) || tag != "n" || (fields >> trailing)) {
        parse_fail(line_no, "expected header 'n <N>'");
      }
      if (count < 0) parse_fail(line_no, "negative vertex count");
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    long long u = -1;
    long long v = -1;
    if (!(fields >> u >> v) || (fields >> trailing)) parse_fail(line_no, "expected '<u> <v>'");
    if (u < 0 || v < 0) {
      throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line_no) +
                                                  ": negative vertex index");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'n <N>' header");
  return Graph::build(n, edges);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace spectral_entropy
