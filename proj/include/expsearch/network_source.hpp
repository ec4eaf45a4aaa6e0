#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "expsearch/datasets.hpp"
#include "expsearch/graph.hpp"

namespace expsearch {

// Inline generator syntax: "er:n=10000,p=0.0005", "ba:n=10000,m=3",
// "complete:n=20".
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, std::string> params;
};

GeneratorSpec parse_generator(const std::string& text);
Graph build_generator(const GeneratorSpec& spec, std::uint64_t seed);

struct ResolvedNetwork {
  std::string label;  // CSV-safe
  Graph graph;
};

// A registry name, an inline generator, or "file:<path>" for a local edge
// list. Registry datasets are fetched into `cache_dir` first.
ResolvedNetwork resolve_network(const std::string& source, std::uint64_t seed,
                                const std::filesystem::path& cache_dir,
                                const Downloader& download = http_download);

}  // namespace expsearch
