#ifndef GAPSETS_CACHE_HPP_
#define GAPSETS_CACHE_HPP_

// On-disk cache of a full genus level. File gapsets-g<g>.txt:
//
//   genus=<g>
//   count=<n>
//   <n lines, each a comma-separated ascending list (empty for {})>
//   crc32=<8 lowercase hex digits>
//
// Lines end in '\n'. The CRC-32 covers every byte before the crc32 line.

#include <cstdint>      // for uint32_t
#include <filesystem>   // for path
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gapset.hpp"

namespace gapsets {

  std::uint32_t crc32_of(std::string_view bytes) noexcept;

  std::string serialize_cache(int genus, std::span<Gapset const> gapsets);

  // Throws CacheError(corrupt) on any header, checksum, count, genus or
  // validation mismatch.
  std::vector<Gapset> parse_cache(int genus, std::string_view bytes);

  class GapsetCache {
   public:
    explicit GapsetCache(std::filesystem::path directory);

    std::filesystem::path const& directory() const noexcept {
      return _directory;
    }

    std::filesystem::path path_for(int genus) const;

    bool contains(int genus) const;

    // Writes through a temporary file and renames it into place.
    void store(int genus, std::span<Gapset const> gapsets) const;

    // Throws CacheError(missing) if absent, CacheError(corrupt) if damaged.
    std::vector<Gapset> load(int genus) const;

   private:
    std::filesystem::path _directory;
  };

}  // namespace gapsets

#endif  // GAPSETS_CACHE_HPP_
