#include "schurlab/cache_file.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "schurlab/error.hpp"

namespace schurlab {

std::size_t load_cache(const std::string& path, LrCache& cache) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader)
    throw SchurError(ErrorCode::InvalidInput, path + ": not an LR cache file");
  std::size_t records = 0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto bad = [&](const std::string& why) {
      return SchurError(ErrorCode::InvalidInput, path + ":" + std::to_string(lineno) + ": " + why);
    };
    const auto p1 = line.find('|');
    const auto p2 = p1 == std::string::npos ? p1 : line.find('|', p1 + 1);
    const auto sp = p2 == std::string::npos ? p2 : line.find(' ', p2 + 1);
    if (sp == std::string::npos) throw bad("malformed record");
    LrKey key;
    try {
      key = {parse_partition(line.substr(0, p1)), parse_partition(line.substr(p1 + 1, p2 - p1 - 1)),
             parse_partition(line.substr(p2 + 1, sp - p2 - 1))};
    } catch (const SchurError& e) {
      throw bad(e.what());
    }
    std::uint64_t count = 0;
    std::istringstream value(line.substr(sp + 1));
    if (!(value >> count) || !value.eof()) throw bad("bad count");
    if (!cache.merge(key, count)) throw bad("conflicting value for " + line.substr(0, sp));
    ++records;
  }
  return records;
}

void save_cache(const std::string& path, const LrCache& cache, const std::string& created_by) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw SchurError(ErrorCode::InvalidInput, "cannot write " + tmp);
    out << kCacheHeader << '\n';
    if (!created_by.empty()) out << "# created-by: " << created_by << '\n';
    for (const auto& [key, count] : cache.snapshot())
      out << key.outer.to_string() << '|' << key.inner.to_string() << '|' << key.content.to_string() << ' ' << count
          << '\n';
    if (!out) throw SchurError(ErrorCode::InvalidInput, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace schurlab
