#include "gapsets/enumerate.hpp"

#include <algorithm>  // for sort, min, merge
#include <atomic>     // for atomic_size_t
#include <bit>        // for countl_zero, countr_one
#include <thread>     // for thread, hardware_concurrency

#include "gapsets/cache.hpp"
#include "gapsets/errors.hpp"

namespace gapsets {

  namespace {

    constexpr GapMask bit(int x) noexcept {
      return GapMask{1} << x;
    }

    int mask_multiplicity(GapMask gaps) noexcept {
      return std::countr_one(gaps >> 1) + 1;
    }

    int mask_frobenius(GapMask gaps) noexcept {
      return gaps == 0 ? -1 : kMaxElement - std::countl_zero(gaps);
    }

    // x > F is a minimal generator of the semigroup iff no split x = y + (x-y)
    // has both parts in the semigroup. Parts below m are gaps, so start at m.
    bool is_effective_generator(GapMask gaps, int x, int m) noexcept {
      for (int y = m; y <= x / 2; ++y) {
        if ((gaps & bit(y)) == 0 && (gaps & bit(x - y)) == 0) {
          return false;
        }
      }
      return true;
    }

    // Appends every descendant of `gaps` exactly `levels` below it, in DFS
    // order with children taken by increasing generator.
    void descend(GapMask gaps, int levels, std::vector<GapMask>& out) {
      if (levels == 0) {
        out.push_back(gaps);
        return;
      }
      int const m     = mask_multiplicity(gaps);
      int const f     = mask_frobenius(gaps);
      int const upper = std::min(f + m + 1, kMaxElement);
      for (int x = std::max(f + 1, 1); x <= upper; ++x) {
        if (is_effective_generator(gaps, x, m)) {
          descend(gaps | bit(x), levels - 1, out);
        }
      }
    }

    void sort_lex(std::vector<GapMask>& masks) {
      std::sort(masks.begin(), masks.end(), mask_lex_less);
    }

    // Pairwise merging of sorted runs; deterministic for a fixed chunk list.
    std::vector<GapMask> merge_chunks(std::vector<std::vector<GapMask>> chunks) {
      if (chunks.empty()) {
        return {};
      }
      while (chunks.size() > 1) {
        std::vector<std::vector<GapMask>> next;
        next.reserve((chunks.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < chunks.size(); i += 2) {
          std::vector<GapMask> merged;
          merged.reserve(chunks[i].size() + chunks[i + 1].size());
          std::merge(chunks[i].begin(),
                     chunks[i].end(),
                     chunks[i + 1].begin(),
                     chunks[i + 1].end(),
                     std::back_inserter(merged),
                     mask_lex_less);
          next.push_back(std::move(merged));
        }
        if (chunks.size() % 2 == 1) {
          next.push_back(std::move(chunks.back()));
        }
        chunks = std::move(next);
      }
      return std::move(chunks.front());
    }

    void check_genus(int genus, EnumerationOptions const& options) {
      if (genus < 0) {
        throw PreconditionError("genus must be non-negative, got "
                                + std::to_string(genus));
      }
      int const ceiling = std::min(options.max_genus, kHardGenusCeiling);
      if (genus > ceiling) {
        throw ResourceLimitError("genus " + std::to_string(genus)
                                 + " exceeds the configured ceiling "
                                 + std::to_string(ceiling));
      }
    }

    unsigned worker_count(EnumerationOptions const& options) {
      if (options.workers != 0) {
        return options.workers;
      }
      return std::max(1U, std::thread::hardware_concurrency());
    }

  }  // namespace

  std::vector<GapMask> enumerate_masks(int                       genus,
                                       EnumerationOptions const& options) {
    check_genus(genus, options);
    int const split = std::clamp(options.split_genus, 0, genus);

    std::vector<GapMask> roots;
    descend(0, split, roots);

    std::vector<std::vector<GapMask>> chunks(roots.size());
    std::atomic_size_t                next{0};
    auto                              work = [&] {
      for (std::size_t i = next++; i < roots.size(); i = next++) {
        descend(roots[i], genus - split, chunks[i]);
        sort_lex(chunks[i]);
      }
    };

    unsigned const workers = std::min<std::size_t>(worker_count(options),
                                                   std::max<std::size_t>(roots.size(), 1));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned i = 0; i < workers; ++i) {
        pool.emplace_back(work);
      }
    }
    return merge_chunks(std::move(chunks));
  }

  void for_each_gapset(int                                       genus,
                       std::function<void(Gapset const&)> const& visit,
                       EnumerationOptions const&                 options) {
    for (GapMask mask : enumerate_masks(genus, options)) {
      visit(detail::trusted_gapset(mask));
    }
  }

  std::vector<Gapset> enumerate_gapsets(int                       genus,
                                        EnumerationOptions const& options) {
    check_genus(genus, options);
    std::optional<GapsetCache> cache;
    if (options.cache_dir) {
      cache.emplace(*options.cache_dir);
      if (cache->contains(genus)) {
        return cache->load(genus);
      }
    }
    std::vector<Gapset> result;
    for_each_gapset(
        genus, [&](Gapset const& g) { result.push_back(g); }, options);
    if (cache) {
      cache->store(genus, result);
    }
    return result;
  }

  std::vector<Gapset> brute_force_gapsets(int genus) {
    if (genus < 0 || genus > kBruteForceGenusLimit) {
      throw PreconditionError("brute force supports 0 <= genus <= "
                              + std::to_string(kBruteForceGenusLimit)
                              + ", got " + std::to_string(genus));
    }
    if (genus == 0) {
      return {Gapset()};
    }
    // Element 1 is always present; choose the other genus - 1 elements from
    // [2, 2g - 1] in lexicographic order.
    int const        top = 2 * genus - 1;
    int const        k   = genus - 1;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      pick[static_cast<std::size_t>(i)] = 2 + i;
    }
    std::vector<Gapset> result;
    while (true) {
      std::vector<int> elts{1};
      elts.insert(elts.end(), pick.begin(), pick.end());
      auto verdict = validate_gapset(GapCandidate(std::move(elts)));
      if (auto* gapset = std::get_if<Gapset>(&verdict)) {
        result.push_back(std::move(*gapset));
      }
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == top - (k - 1 - i)) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    return result;
  }

  bool matches(Gapset const& gapset, SparseFilter const& filter) noexcept {
    int const kappa = kappa_and_alpha(gapset).kappa;
    bool const sparse_ok
        = filter.pure ? kappa == filter.kappa : kappa <= filter.kappa;
    return sparse_ok && (!filter.depth || depth(gapset) == *filter.depth);
  }

  std::vector<Gapset> filter_pure_sparse(std::span<Gapset const> gapsets,
                                         int                     kappa,
                                         std::optional<int>      depth) {
    if (kappa < 0) {
      throw PreconditionError("kappa must be non-negative, got "
                              + std::to_string(kappa));
    }
    SparseFilter const  filter{kappa, true, depth};
    std::vector<Gapset> result;
    for (auto const& g : gapsets) {
      if (matches(g, filter)) {
        result.push_back(g);
      }
    }
    return result;
  }

  EnumerationRun run_enumeration(
      int                                       genus,
      std::optional<SparseFilter> const&        filter,
      EnumerationOptions const&                 options,
      std::function<void(Gapset const&)> const& sink) {
    auto const     start = std::chrono::steady_clock::now();
    EnumerationRun run;
    run.genus  = genus;
    run.filter = filter;

    auto emit = [&](Gapset const& g) {
      if (!filter || matches(g, *filter)) {
        ++run.total;
        sink(g);
      }
    };

    check_genus(genus, options);
    if (options.cache_dir) {
      GapsetCache cache(*options.cache_dir);
      run.cache_path = cache.path_for(genus);
      if (cache.contains(genus)) {
        run.source = RunSource::cache;
        for (auto const& g : cache.load(genus)) {
          emit(g);
        }
      } else {
        auto const all = enumerate_gapsets(genus, options);
        for (auto const& g : all) {
          emit(g);
        }
      }
    } else {
      for_each_gapset(genus, emit, options);
    }
    run.wall_time = std::chrono::steady_clock::now() - start;
    return run;
  }

}  // namespace gapsets
