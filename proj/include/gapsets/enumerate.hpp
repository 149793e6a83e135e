#ifndef GAPSETS_ENUMERATE_HPP_
#define GAPSETS_ENUMERATE_HPP_

// Exhaustive generation of all gapsets of a fixed genus.
//
// The fast route walks the semigroup tree: the root is the empty gapset, and
// the children of a gapset G with Frobenius number F are G ∪ {x} for every
// minimal generator x > F of the complementary semigroup. Level g of the tree
// holds every genus-g gapset exactly once. The tree is split at a shallow
// level and the subtrees are searched concurrently; each subtree's output is
// sorted, then the chunks are merged, so the emitted order (lexicographic on
// element sequences) does not depend on the number of workers.
//
// brute_force_gapsets is an independent oracle that filters all g-subsets of
// [1, 2g - 1] through validate_gapset.

#include <chrono>      // for duration
#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <functional>  // for function
#include <optional>    // for optional
#include <span>        // for span
#include <vector>      // for vector

#include "gapset.hpp"

namespace gapsets {

  inline constexpr int kDefaultGenusCeiling = 30;
  // Imposed by GapMask: genus g needs elements up to 2g - 1 <= kMaxElement.
  inline constexpr int kHardGenusCeiling = (kMaxElement + 1) / 2;

  struct EnumerationOptions {
    int max_genus = kDefaultGenusCeiling;
    // 0 means std::thread::hardware_concurrency().
    unsigned workers = 0;
    // Subtrees are rooted at genus min(g, split_genus).
    int split_genus = 8;
    // When set, enumerate_gapsets loads from / stores to this directory.
    std::optional<std::filesystem::path> cache_dir;
  };

  // Sorted lexicographically. Throws PreconditionError for g < 0 and
  // ResourceLimitError for g above options.max_genus (or kHardGenusCeiling).
  std::vector<GapMask> enumerate_masks(int                       genus,
                                       EnumerationOptions const& options = {});

  // Every gapset of the given genus, lexicographically ordered. Uses the
  // cache when options.cache_dir is set.
  std::vector<Gapset> enumerate_gapsets(int                       genus,
                                        EnumerationOptions const& options = {});

  // Streaming form of enumerate_gapsets (same order; never touches a cache).
  void for_each_gapset(int                                       genus,
                       std::function<void(Gapset const&)> const& visit,
                       EnumerationOptions const&                 options = {});

  inline constexpr int kBruteForceGenusLimit = 12;

  // Same output as enumerate_gapsets, computed by exhaustive subset search.
  // Throws PreconditionError for g < 0 or g > kBruteForceGenusLimit.
  std::vector<Gapset> brute_force_gapsets(int genus);

  // kappa-sparse: kappa(G) <= kappa. Pure: kappa(G) == kappa.
  struct SparseFilter {
    int                kappa;
    bool               pure = true;
    std::optional<int> depth;
  };

  bool matches(Gapset const& gapset, SparseFilter const& filter) noexcept;

  // Keeps the gapsets in G_kappa(g) (optionally of a given depth), preserving
  // order. Throws PreconditionError for kappa < 0.
  std::vector<Gapset> filter_pure_sparse(std::span<Gapset const> gapsets,
                                         int                     kappa,
                                         std::optional<int>      depth = {});

  enum class RunSource { fresh_search, cache };

  struct EnumerationRun {
    int                           genus = 0;
    std::optional<SparseFilter>   filter;
    std::size_t                   total = 0;
    RunSource                     source = RunSource::fresh_search;
    std::chrono::duration<double> wall_time{};
    std::optional<std::filesystem::path> cache_path;
  };

  // Enumerates genus g (from the cache if configured and present, storing it
  // otherwise), applies the filter, and hands each surviving gapset to sink.
  EnumerationRun run_enumeration(
      int                                       genus,
      std::optional<SparseFilter> const&        filter,
      EnumerationOptions const&                 options,
      std::function<void(Gapset const&)> const& sink);

}  // namespace gapsets

#endif  // GAPSETS_ENUMERATE_HPP_
