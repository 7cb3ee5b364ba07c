#include "cospec/io.hpp"

#include <fstream>
#include <sstream>

#include "cospec/error.hpp"

namespace cospec {

namespace {

int parse_sign(const std::string& token) {
  if (token == "+" || token == "+1") return +1;
  if (token == "-" || token == "-1") return -1;
  throw ParseError("bad edge sign '" + token + "' (expected +, -, +1 or -1)");
}

// Next line that is neither blank nor a '#' comment; false at EOF.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

SignedGraph parse_graph(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("empty graph input");

  int n = 0;
  long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
      throw ParseError("bad header line '" + line + "' (expected 'n m')");
  }
  if (n < 0 || m < 0) throw ParseError("negative count in header");

  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u = 0, v = 0;
    std::string sign_token, extra;
    if (!(row >> u >> v >> sign_token) || (row >> extra))
      throw ParseError("bad edge line '" + line + "' (expected 'u v s')");
    edges.push_back({u, v, parse_sign(sign_token)});
  }
  if (next_content_line(in, line))
    throw ParseError("trailing content after " + std::to_string(m) + " edges: '" + line + "'");
  return SignedGraph(n, edges);
}

SignedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

SignedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string write_graph(const SignedGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << g.order() << " " << g.edge_count() << "\n";
  for (const SignedEdge& e : g.edges())
    out << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
  return out.str();
}

void save_graph_file(const SignedGraph& g, const std::string& path,
                     const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file '" + path + "'");
  out << write_graph(g, comments);
}

}  // namespace cospec
