#include "expsearch/datasets.hpp"

#include <openssl/evp.h>
#include <zlib.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "expsearch/edge_list.hpp"

namespace expsearch {

const std::vector<DatasetSpec>& dataset_registry() {
  static const std::vector<DatasetSpec> registry = {
      {"celegans", "http://www-personal.umich.edu/~mejn/netdata/celegansneural.zip", std::nullopt,
       DatasetFormat::kGmlZip, "Watts-Strogatz neural network via Newman's network data page (directed, symmetrized)"},
      {"power", "http://www-personal.umich.edu/~mejn/netdata/power.zip", std::nullopt, DatasetFormat::kGmlZip,
       "Western US power grid via Newman's network data page"},
      {"condmat", "https://snap.stanford.edu/data/ca-CondMat.txt.gz", std::nullopt, DatasetFormat::kEdgeList,
       "SNAP ca-CondMat"},
      {"enron", "https://snap.stanford.edu/data/email-Enron.txt.gz", std::nullopt, DatasetFormat::kEdgeList,
       "SNAP email-Enron"},
      {"hepph", "https://snap.stanford.edu/data/cit-HepPh.txt.gz", std::nullopt, DatasetFormat::kEdgeList,
       "SNAP cit-HepPh (directed, symmetrized)"},
      {"gnutella", "https://snap.stanford.edu/data/p2p-Gnutella31.txt.gz", std::nullopt, DatasetFormat::kEdgeList,
       "SNAP p2p-Gnutella31 (directed, symmetrized)"},
      {"epinions", "https://snap.stanford.edu/data/soc-Epinions1.txt.gz", std::nullopt, DatasetFormat::kEdgeList,
       "SNAP soc-Epinions1 (directed, symmetrized)"},
      {"slashdot", "https://snap.stanford.edu/data/soc-Slashdot0902.txt.gz", std::nullopt,
       DatasetFormat::kEdgeList, "SNAP soc-Slashdot0902 (directed, symmetrized)"},
      {"netscience", "http://www-personal.umich.edu/~mejn/netdata/netscience.zip", std::nullopt,
       DatasetFormat::kGmlZip, "Network-science co-authorship; trace demos only", true},
  };
  return registry;
}

const DatasetSpec* find_dataset(const std::string& name) {
  for (const auto& d : dataset_registry()) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv("EXPSEARCH_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "expsearch";
  }
  return std::filesystem::path(".expsearch-cache");
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

namespace {

std::string file_name_of(const std::string& url) {
  const auto slash = url.find_last_of('/');
  std::string name = slash == std::string::npos ? url : url.substr(slash + 1);
  return name.empty() ? "download" : name;
}

void quarantine(const std::filesystem::path& path) {
  std::error_code ec;
  std::filesystem::rename(path, path.string() + ".quarantined", ec);
}

}  // namespace

std::filesystem::path fetch_dataset(const DatasetSpec& spec, const std::filesystem::path& cache_dir,
                                    const Downloader& download) {
  std::filesystem::create_directories(cache_dir);
  const auto dest = cache_dir / file_name_of(spec.url);

  if (std::filesystem::exists(dest)) {
    if (!spec.sha256 || sha256_file(dest) == *spec.sha256) return dest;
    quarantine(dest);
  }

  const auto partial = std::filesystem::path(dest.string() + ".part");
  download(spec.url, partial);
  if (spec.sha256) {
    const auto got = sha256_file(partial);
    if (got != *spec.sha256) {
      quarantine(partial);
      throw IntegrityError("checksum mismatch for " + spec.name + ": expected " + *spec.sha256 + ", got " + got);
    }
  }
  std::filesystem::rename(partial, dest);
  return dest;
}

Graph load_gml(const std::string& text) {
  std::istringstream in(text);
  std::unordered_map<std::int64_t, NodeId> remap;
  auto intern = [&](std::int64_t raw) {
    return remap.try_emplace(raw, static_cast<NodeId>(remap.size())).first->second;
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string tok;
  std::optional<std::int64_t> source;
  std::optional<std::int64_t> target;
  int depth = 0;
  bool in_edge = false;
  int edge_depth = 0;
  std::string prev;
  while (in >> tok) {
    if (tok == "[") {
      ++depth;
      if (prev == "edge") {
        in_edge = true;
        edge_depth = depth;
        source.reset();
        target.reset();
      }
    } else if (tok == "]") {
      if (in_edge && depth == edge_depth) {
        if (!source || !target) throw std::runtime_error("GML edge without source/target");
        const NodeId a = intern(*source);
        const NodeId b = intern(*target);
        edges.emplace_back(a, b);
        in_edge = false;
      }
      --depth;
    } else if (in_edge && depth == edge_depth && (tok == "source" || tok == "target")) {
      std::int64_t v = 0;
      if (!(in >> v)) throw std::runtime_error("GML: non-integer " + tok);
      (tok == "source" ? source : target) = v;
    }
    prev = tok;
  }
  if (edges.empty()) throw std::runtime_error("GML: no edges found");
  return Graph::from_edges(remap.size(), edges);
}

namespace {

std::uint32_t le32(const std::string& s, std::size_t at) {
  if (at + 4 > s.size()) throw std::runtime_error("zip: truncated archive");
  return static_cast<std::uint32_t>(static_cast<unsigned char>(s[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 3])) << 24;
}

std::uint16_t le16(const std::string& s, std::size_t at) {
  if (at + 2 > s.size()) throw std::runtime_error("zip: truncated archive");
  return static_cast<std::uint16_t>(static_cast<unsigned char>(s[at]) |
                                    static_cast<unsigned char>(s[at + 1]) << 8);
}

std::string inflate_raw(const char* data, std::size_t size, std::size_t expected) {
  std::string out(expected, '\0');
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw std::runtime_error("zip: inflateInit failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data));
  zs.avail_in = static_cast<uInt>(size);
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("zip: corrupt deflate stream");
  return out;
}

}  // namespace

std::string read_zip_entry(const std::filesystem::path& archive, const std::string& suffix) {
  std::ifstream in(archive, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + archive.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  // End of central directory record: last occurrence of its signature.
  std::size_t eocd = std::string::npos;
  for (std::size_t i = bytes.size() >= 22 ? bytes.size() - 22 : 0;; --i) {
    if (le32(bytes, i) == 0x06054b50) {
      eocd = i;
      break;
    }
    if (i == 0) break;
  }
  if (eocd == std::string::npos) throw std::runtime_error("zip: no central directory in " + archive.string());
  const std::size_t entries = le16(bytes, eocd + 10);
  std::size_t at = le32(bytes, eocd + 16);

  for (std::size_t e = 0; e < entries; ++e) {
    if (le32(bytes, at) != 0x02014b50) throw std::runtime_error("zip: bad central directory entry");
    const auto method = le16(bytes, at + 10);
    const std::size_t csize = le32(bytes, at + 20);
    const std::size_t usize = le32(bytes, at + 24);
    const std::size_t name_len = le16(bytes, at + 28);
    const std::size_t extra_len = le16(bytes, at + 30);
    const std::size_t comment_len = le16(bytes, at + 32);
    const std::size_t local = le32(bytes, at + 42);
    const std::string name = bytes.substr(at + 46, name_len);
    at += 46 + name_len + extra_len + comment_len;
    if (name.size() < suffix.size() || name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    if (le32(bytes, local) != 0x04034b50) throw std::runtime_error("zip: bad local header");
    const std::size_t data = local + 30 + le16(bytes, local + 26) + le16(bytes, local + 28);
    if (data + csize > bytes.size()) throw std::runtime_error("zip: truncated entry " + name);
    if (method == 0) return bytes.substr(data, csize);
    if (method == 8) return inflate_raw(bytes.data() + data, csize, usize);
    throw std::runtime_error("zip: unsupported compression method " + std::to_string(method));
  }
  throw std::runtime_error("zip: no entry ending in '" + suffix + "' in " + archive.string());
}

Graph load_dataset_file(const DatasetSpec& spec, const std::filesystem::path& path) {
  switch (spec.format) {
    case DatasetFormat::kEdgeList: return load_edge_list_file(path);
    case DatasetFormat::kGmlZip: return load_gml(read_zip_entry(path, ".gml"));
  }
  throw std::runtime_error("unknown dataset format");
}

}  // namespace expsearch
