#include "expsearch/network_source.hpp"

#include <algorithm>
#include <charconv>

#include "expsearch/edge_list.hpp"
#include "expsearch/generators.hpp"

namespace expsearch {

GeneratorSpec parse_generator(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) {
    throw ArgumentError("generator '" + text + "' must look like kind:key=value,...");
  }
  GeneratorSpec spec;
  spec.kind = text.substr(0, colon);
  std::size_t at = colon + 1;
  while (at <= text.size()) {
    auto comma = text.find(',', at);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(at, comma - at);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ArgumentError("generator parameter '" + item + "' must be key=value");
    }
    spec.params[item.substr(0, eq)] = item.substr(eq + 1);
    at = comma + 1;
  }
  return spec;
}

namespace {

const std::string& param(const GeneratorSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw ArgumentError(spec.kind + " generator needs '" + key + "='");
  return it->second;
}

std::size_t count_param(const GeneratorSpec& spec, const std::string& key) {
  const auto& v = param(spec, key);
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ArgumentError("bad integer for " + key + ": " + v);
  return out;
}

double real_param(const GeneratorSpec& spec, const std::string& key) {
  const auto& v = param(spec, key);
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw ArgumentError("bad number for " + key + ": " + v);
  return out;
}

}  // namespace

Graph build_generator(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.kind == "er") return generate_er(count_param(spec, "n"), real_param(spec, "p"), seed);
  if (spec.kind == "ba") return generate_ba(count_param(spec, "n"), count_param(spec, "m"), seed);
  if (spec.kind == "complete") return generate_er(count_param(spec, "n"), 1.0, seed);
  throw ArgumentError("unknown generator kind '" + spec.kind + "'");
}

ResolvedNetwork resolve_network(const std::string& source, std::uint64_t seed,
                                const std::filesystem::path& cache_dir, const Downloader& download) {
  if (source.rfind("file:", 0) == 0) {
    const std::filesystem::path path = source.substr(5);
    return {path.filename().string(), load_edge_list_file(path)};
  }
  if (const auto* spec = find_dataset(source)) {
    const auto path = fetch_dataset(*spec, cache_dir, download);
    return {spec->name, load_dataset_file(*spec, path)};
  }
  if (source.find(':') != std::string::npos) {
    auto label = source;
    std::replace(label.begin(), label.end(), ',', ';');
    return {label, build_generator(parse_generator(source), seed)};
  }
  throw ArgumentError("unknown network '" + source + "'");
}

}  // namespace expsearch
