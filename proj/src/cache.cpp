#include "gapsets/cache.hpp"

#include <zlib.h>  // for crc32

#include <cstdio>    // for snprintf
#include <fstream>   // for ifstream, ofstream
#include <iterator>  // for istreambuf_iterator
#include <sstream>   // for ostringstream

#include "gapsets/errors.hpp"

namespace gapsets {

  namespace {

    [[noreturn]] void corrupt(std::string const& why) {
      throw CacheError(CacheError::Kind::corrupt, "corrupt gapset cache: " + why);
    }

    // Consumes one '\n'-terminated line from `rest`.
    std::string_view next_line(std::string_view& rest) {
      auto const nl = rest.find('\n');
      if (nl == std::string_view::npos) {
        corrupt("truncated file");
      }
      auto line = rest.substr(0, nl);
      rest.remove_prefix(nl + 1);
      return line;
    }

    std::uint64_t parse_field(std::string_view line, std::string_view key) {
      if (line.substr(0, key.size()) != key) {
        corrupt("expected '" + std::string(key) + "' header");
      }
      auto const digits = line.substr(key.size());
      if (digits.empty() || digits.size() > 18
          || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        corrupt("malformed '" + std::string(key) + "' header");
      }
      return std::stoull(std::string(digits));
    }

    std::string hex8(std::uint32_t value) {
      char buf[9];
      std::snprintf(buf, sizeof(buf), "%08x", value);
      return buf;
    }

  }  // namespace

  std::uint32_t crc32_of(std::string_view bytes) noexcept {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    crc       = ::crc32(crc,
                  reinterpret_cast<Bytef const*>(bytes.data()),
                  static_cast<uInt>(bytes.size()));
    return static_cast<std::uint32_t>(crc);
  }

  std::string serialize_cache(int genus, std::span<Gapset const> gapsets) {
    std::ostringstream body;
    body << "genus=" << genus << '\n' << "count=" << gapsets.size() << '\n';
    for (auto const& g : gapsets) {
      auto const elts = g.elements();
      for (std::size_t i = 0; i < elts.size(); ++i) {
        if (i > 0) {
          body << ',';
        }
        body << elts[i];
      }
      body << '\n';
    }
    std::string out = body.str();
    out += "crc32=" + hex8(crc32_of(out)) + '\n';
    return out;
  }

  std::vector<Gapset> parse_cache(int genus, std::string_view bytes) {
    auto const marker = bytes.rfind("crc32=");
    if (marker == std::string_view::npos
        || (marker != 0 && bytes[marker - 1] != '\n')) {
      corrupt("missing checksum line");
    }
    auto const covered = bytes.substr(0, marker);
    auto       tail    = bytes.substr(marker + 6);
    if (tail.size() != 9 || tail.back() != '\n'
        || tail.substr(0, 8).find_first_not_of("0123456789abcdef")
               != std::string_view::npos) {
      corrupt("malformed checksum line");
    }
    if (std::string(tail.substr(0, 8)) != hex8(crc32_of(covered))) {
      corrupt("checksum mismatch");
    }

    std::string_view rest = covered;
    if (parse_field(next_line(rest), "genus=")
        != static_cast<std::uint64_t>(genus)) {
      corrupt("genus header does not match the requested genus");
    }
    auto const count = parse_field(next_line(rest), "count=");

    std::vector<Gapset> result;
    while (!rest.empty()) {
      auto const line = next_line(rest);
      GapCandidate candidate;
      try {
        candidate = parse_candidate(line);
      } catch (std::invalid_argument const& e) {
        corrupt(e.what());
      }
      auto verdict = validate_gapset(candidate);
      auto* gapset = std::get_if<Gapset>(&verdict);
      if (gapset == nullptr || gapset->genus() != genus) {
        corrupt("entry " + to_string(candidate) + " is not a genus-"
                + std::to_string(genus) + " gapset");
      }
      if (!result.empty() && !(result.back() < *gapset)) {
        corrupt("entries are not in strictly increasing lexicographic order");
      }
      result.push_back(std::move(*gapset));
    }
    if (result.size() != count) {
      corrupt("count header says " + std::to_string(count) + " but file holds "
              + std::to_string(result.size()));
    }
    return result;
  }

  GapsetCache::GapsetCache(std::filesystem::path directory)
      : _directory(std::move(directory)) {}

  std::filesystem::path GapsetCache::path_for(int genus) const {
    return _directory / ("gapsets-g" + std::to_string(genus) + ".txt");
  }

  bool GapsetCache::contains(int genus) const {
    return std::filesystem::is_regular_file(path_for(genus));
  }

  void GapsetCache::store(int genus, std::span<Gapset const> gapsets) const {
    std::filesystem::create_directories(_directory);
    auto const target = path_for(genus);
    auto       tmp    = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << serialize_cache(genus, gapsets);
      if (!out) {
        throw GapsetError("failed to write " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, target);
  }

  std::vector<Gapset> GapsetCache::load(int genus) const {
    auto const    path = path_for(genus);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw CacheError(CacheError::Kind::missing,
                       "no cached gapsets at " + path.string());
    }
    std::string const bytes{std::istreambuf_iterator<char>(in),
                            std::istreambuf_iterator<char>()};
    return parse_cache(genus, bytes);
  }

}  // namespace gapsets
