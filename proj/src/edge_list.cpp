#include "expsearch/edge_list.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace expsearch {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  auto tok = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return tok;
}

std::int64_t parse_id(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "non-integer token '" + std::string(tok) + "'");
  }
  return value;
}

std::string gunzip_file(const std::filesystem::path& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw std::runtime_error("cannot open " + path.string());
  std::string out;
  char buf[1 << 16];
  int got = 0;
  while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
  const bool failed = got < 0;
  gzclose(f);
  if (failed) throw std::runtime_error("corrupt gzip stream in " + path.string());
  return out;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::int64_t, NodeId> remap;
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto intern = [&](std::int64_t raw) {
    auto [it, inserted] = remap.try_emplace(raw, static_cast<NodeId>(remap.size()));
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest(line);
    auto first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(lineno, "expected two node ids");
    if (!next_token(rest).empty()) throw ParseError(lineno, "trailing tokens after edge");
    const auto u = parse_id(first, lineno);
    const auto v = parse_id(second, lineno);
    // Interning order follows appearance, including self-loop endpoints.
    const NodeId a = intern(u);
    const NodeId b = intern(v);
    edges.emplace_back(a, b);
  }
  if (remap.empty()) throw ParseError(lineno, "empty edge list");
  return Graph::from_edges(remap.size(), edges);
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  if (path.extension() == ".gz") {
    std::istringstream in(gunzip_file(path));
    return load_edge_list(in);
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace expsearch
