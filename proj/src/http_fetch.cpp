// cpp-httplib is confined to this translation unit.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <fstream>

#include "expsearch/datasets.hpp"

namespace expsearch {

void http_download(const std::string& url, const std::filesystem::path& dest) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw FetchError("malformed URL " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(20);
  client.set_read_timeout(120);

  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw FetchError("cannot write " + dest.string());
  auto res = client.Get(path, [&](const char* data, std::size_t len) {
    out.write(data, static_cast<std::streamsize>(len));
    return static_cast<bool>(out);
  });
  out.close();
  if (!res) {
    std::filesystem::remove(dest);
    throw FetchError("download of " + url + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    std::filesystem::remove(dest);
    throw FetchError("download of " + url + " failed: HTTP " + std::to_string(res->status));
  }
}

}  // namespace expsearch
