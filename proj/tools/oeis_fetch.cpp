#include "oeis_fetch.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "dismal/error.hpp"

namespace fs = std::filesystem;

namespace oeis {

namespace {

fs::path cache_dir() {
  if (const char* d = std::getenv("DISMAL_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return fs::path(x) / "dismal";
  if (const char* h = std::getenv("HOME")) return fs::path(h) / ".cache" / "dismal";
  return fs::temp_directory_path() / "dismal-cache";
}

bool valid_anumber(const std::string& a) {
  if (a.size() != 7 || a[0] != 'A') return false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(a[i]))) return false;
  }
  return true;
}

}  // namespace

std::string load_bfile(const std::string& anumber, bool online) {
  if (!valid_anumber(anumber)) throw dismal::ParseError("expected an A-number like A067399, got '" + anumber + "'");
  const fs::path cached = cache_dir() / (anumber + ".b");
  if (std::ifstream in{cached, std::ios::binary}) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (!online) {
    throw dismal::Error(anumber + " is not cached in " + cache_dir().string() + "; pass --online to download it");
  }
  const std::string path = "/" + anumber + "/b" + anumber.substr(1) + ".txt";
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  httplib::SSLClient cli("oeis.org");
#else
  httplib::Client cli("http://oeis.org");
#endif
  cli.set_follow_location(true);
  cli.set_connection_timeout(10);
  auto res = cli.Get(path);
  if (!res || res->status != 200) {
    throw dismal::Error("download of " + anumber + " failed" +
                        (res ? " with HTTP " + std::to_string(res->status) : ": " + httplib::to_string(res.error())));
  }
  fs::create_directories(cached.parent_path());
  std::ofstream(cached, std::ios::binary) << res->body;
  return res->body;
}

}  // namespace oeis
