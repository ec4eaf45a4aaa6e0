#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "expsearch/graph.hpp"

namespace expsearch {

enum class DatasetFormat {
  kEdgeList,    // plain or .gz SNAP edge list
  kGmlZip,      // zip archive holding a single GML file
};

struct DatasetSpec {
  std::string name;
  std::string url;
  std::optional<std::string> sha256;  // lowercase hex
  DatasetFormat format = DatasetFormat::kEdgeList;
  std::string note;                   // provenance remarks
  bool optional = false;              // excluded from default table runs
};

// Download failed; the operation may succeed if retried.
class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Downloaded or cached bytes do not match the declared checksum.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<DatasetSpec>& dataset_registry();
const DatasetSpec* find_dataset(const std::string& name);

// Cache directory: explicit value, else $EXPSEARCH_CACHE_DIR, else
// $HOME/.cache/expsearch.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir);

// Transport used by fetch_dataset: writes the body at `url` to `dest` or
// throws FetchError.
using Downloader = std::function<void(const std::string& url, const std::filesystem::path& dest)>;
void http_download(const std::string& url, const std::filesystem::path& dest);

// Ensures the dataset is present in `cache_dir` and returns its path. A cached
// file is reused without network access when it matches the checksum (or no
// checksum is declared). A mismatching file is renamed to *.quarantined.
std::filesystem::path fetch_dataset(const DatasetSpec& spec, const std::filesystem::path& cache_dir,
                                    const Downloader& download = http_download);

std::string sha256_file(const std::filesystem::path& path);

// Loads a fetched dataset according to its format; directed sources are
// symmetrized.
Graph load_dataset_file(const DatasetSpec& spec, const std::filesystem::path& path);

// Edge pairs from GML text ("edge [ source a target b ]"), remapped densely.
Graph load_gml(const std::string& text);

// Bytes of the first entry in a zip archive whose name ends with `suffix`.
std::string read_zip_entry(const std::filesystem::path& archive, const std::string& suffix);

}  // namespace expsearch
