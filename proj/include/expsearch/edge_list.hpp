#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "expsearch/graph.hpp"

namespace expsearch {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads a SNAP-style edge list: one "u v" pair per line, '#' comments.
// Ids are remapped densely in first-appearance order and every edge is
// symmetrized; self-loops and duplicates are dropped.
Graph load_edge_list(std::istream& in);

// As above from a file; a ".gz" suffix is decompressed transparently.
Graph load_edge_list_file(const std::filesystem::path& path);

// Writes each undirected edge once as "u v" with u < v, lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace expsearch
