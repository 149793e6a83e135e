// gapsets: enumerate gapsets by genus, tabulate #G_kappa(g), evaluate the
// phi / sigma maps and run the verification suites.
//
// Exit status: 0 success, 1 property violation, 2 bad flags or unmet
// precondition, 3 resource limit, 4 input is not a gapset.

#include <climits>   // for INT_MAX
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string

#include "CLI11.hpp"

#include "gapsets/cache.hpp"
#include "gapsets/enumerate.hpp"
#include "gapsets/errors.hpp"
#include "gapsets/gapset.hpp"
#include "gapsets/properties.hpp"
#include "gapsets/render.hpp"
#include "gapsets/sparse_maps.hpp"
#include "gapsets/tally.hpp"

namespace {

  using namespace gapsets;

  constexpr int kExitViolation = 1;
  constexpr int kExitBadFlags  = 2;
  constexpr int kExitResource  = 3;
  constexpr int kExitNotGapset = 4;

  struct CommonFlags {
    unsigned    workers = 0;
    std::string cache_dir;
  };

  EnumerationOptions options_from(CommonFlags const& flags) {
    EnumerationOptions opts;
    opts.workers = flags.workers;
    if (!flags.cache_dir.empty()) {
      opts.cache_dir = flags.cache_dir;
    }
    return opts;
  }

  void print_invariants(Gapset const& g) {
    auto const inv = invariants(g);
    std::cout << "genus: " << inv.genus << '\n'
              << "multiplicity: " << inv.multiplicity << '\n'
              << "conductor: " << inv.conductor << '\n'
              << "frobenius: " << inv.frobenius << '\n'
              << "depth: " << inv.depth << '\n'
              << "kappa: " << inv.kappa << '\n'
              << "alpha: " << (inv.alpha ? std::to_string(*inv.alpha) : "none")
              << '\n';
  }

  ////////////////////////////////////////////////////////////////////////////
  // enumerate
  ////////////////////////////////////////////////////////////////////////////

  struct EnumerateFlags {
    int                genus = 0;
    std::optional<int> kappa;
    bool               pure = false;
    std::optional<int> depth;
    std::string        format = "json";
  };

  int cmd_enumerate(EnumerateFlags const& flags, CommonFlags const& common) {
    if (flags.pure && !flags.kappa) {
      std::cerr << "error: --pure requires --kappa\n";
      return kExitBadFlags;
    }
    std::optional<SparseFilter> filter;
    if (flags.kappa) {
      filter = SparseFilter{*flags.kappa, flags.pure, flags.depth};
    } else if (flags.depth) {
      filter = SparseFilter{INT_MAX, false, flags.depth};
    }
    RecordFormat format = RecordFormat::json;
    if (flags.format == "csv") {
      format = RecordFormat::csv;
      std::cout << record_csv_header() << '\n';
    } else if (flags.format == "text") {
      format = RecordFormat::text;
    }
    auto const run = run_enumeration(
        flags.genus, filter, options_from(common), [&](Gapset const& g) {
          std::cout << render_record(g, format) << '\n';
        });
    std::cerr << "genus " << run.genus << ": " << run.total << " gapsets ("
              << (run.source == RunSource::cache ? "cache" : "fresh search")
              << ", " << run.wall_time.count() << " s)\n";
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////////
  // table / sequence
  ////////////////////////////////////////////////////////////////////////////

  int cmd_table(int max_genus, std::string const& format, CommonFlags const& common) {
    auto const grid = build_count_grid(max_genus, options_from(common));
    std::cout << (format == "csv" ? render_grid_csv(grid)
                                  : render_grid_markdown(grid));
    return 0;
  }

  int cmd_sequence_ng(int max_genus, CommonFlags const& common) {
    std::cout << render_genus_counts(build_count_grid(max_genus, options_from(common)));
    return 0;
  }

  int cmd_sequence_gw(int max_w, CommonFlags const& common) {
    std::cout << render_diagonal(diagonal_sequence(max_w, options_from(common)));
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////////
  // map
  ////////////////////////////////////////////////////////////////////////////

  struct MapFlags {
    std::string        gapset;
    std::string        op = "phi";
    std::optional<int> kappa;
  };

  int cmd_map(MapFlags const& flags) {
    GapCandidate candidate;
    try {
      candidate = parse_candidate(flags.gapset);
    } catch (std::invalid_argument const& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitBadFlags;
    }
    auto verdict = validate_gapset(candidate);
    if (auto const* w = std::get_if<RejectionWitness>(&verdict)) {
      std::cout << "input: " << to_string(candidate) << '\n'
                << "not a gapset, witness: " << to_string(*w) << '\n';
      return kExitNotGapset;
    }
    auto const input = std::get<Gapset>(verdict);
    std::cout << "input: " << to_string(input) << '\n';
    print_invariants(input);
    std::cout << "op: " << flags.op << '\n';

    int const m = multiplicity(input);
    if (flags.op == "phi") {
      auto const image = phi(input);
      std::cout << "image: " << to_string(image.elements) << '\n'
                << "classification: " << to_string(image.classification) << '\n'
                << "claimed-multiplicity: " << image.claimed_multiplicity << '\n';
      if (depth(input) <= 3) {
        auto const s = sigma(input);
        std::cout << "sigma: " << to_string(s) << '\n'
                  << "phi-equals-sigma: " << (s == image.elements ? "yes" : "no")
                  << '\n';
      }
    } else if (flags.op == "sigma") {
      auto const image = sigma(input);
      std::cout << "image: " << to_string(image) << '\n'
                << "classification: " << to_string(classify_image(image, m + 1))
                << '\n'
                << "claimed-multiplicity: " << m + 1 << '\n';
    } else {
      if (!flags.kappa) {
        std::cerr << "error: --op phi-inverse requires --kappa (the input's kappa)\n";
        return kExitBadFlags;
      }
      auto const pre = phi_inverse(input, *flags.kappa);
      std::cout << "image: " << to_string(pre) << '\n'
                << "classification: gapset\n"
                << "round-trip: "
                << (phi(pre).elements == input.candidate() ? "yes" : "no") << '\n';
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////////
  // verify
  ////////////////////////////////////////////////////////////////////////////

  // Exhaustive m-set check grows like 2^m; this keeps it to ~32k sets.
  constexpr int kMSetLemmaCap = 16;

  int cmd_verify(int max_genus, std::string const& suite, CommonFlags const& common) {
    auto const opts = options_from(common);
    std::vector<SuiteReport> reports;
    bool const all = suite == "all";
    if (all || suite == "core" || suite == "sparse" || suite == "phi") {
      auto const gapsets = gapsets_up_to(max_genus, opts);
      if (all || suite == "core") {
        reports.push_back(check_core_properties(gapsets));
      }
      if (all || suite == "sparse") {
        reports.push_back(check_sparse_properties(gapsets));
      }
      if (all || suite == "phi") {
        auto report = check_phi_properties(gapsets);
        report.absorb(check_m_set_lemma(std::min(max_genus + 1, kMSetLemmaCap)));
        reports.push_back(std::move(report));
      }
    }
    if (all || suite == "bijection") {
      reports.push_back(check_bijection_properties(max_genus, opts));
    }

    std::size_t violations = 0;
    for (auto const& r : reports) {
      std::cout << "suite " << r.name() << ": gapsets=" << r.gapsets_covered()
                << " checks=" << r.checks_run()
                << " violations=" << r.violations().size() << '\n';
      for (auto const& [check, n] : r.evaluations()) {
        std::cout << "  " << check << ": " << n << '\n';
      }
      for (auto const& v : r.violations()) {
        std::cout << "  VIOLATION " << v.check << ' ' << v.witness
                  << (v.detail.empty() ? "" : " " + v.detail) << '\n';
      }
      violations += r.violations().size();
    }
    std::cout << "total violations: " << violations << '\n';
    return violations == 0 ? 0 : kExitViolation;
  }

  ////////////////////////////////////////////////////////////////////////////
  // cache
  ////////////////////////////////////////////////////////////////////////////

  int cmd_cache(std::string const& action, int genus, CommonFlags const& common) {
    if (common.cache_dir.empty()) {
      std::cerr << "error: cache commands need --cache-dir or GAPSET_CACHE_DIR\n";
      return kExitBadFlags;
    }
    GapsetCache cache(common.cache_dir);
    if (action == "store") {
      auto opts      = options_from(common);
      opts.cache_dir = std::nullopt;
      auto const all = enumerate_gapsets(genus, opts);
      cache.store(genus, all);
      std::cout << cache.path_for(genus).string() << ": " << all.size()
                << " gapsets\n";
      return 0;
    }
    auto const loaded = cache.load(genus);
    std::cout << cache.path_for(genus).string() << ": ok, " << loaded.size()
              << " gapsets\n";
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and analyse gapsets of numerical semigroups"};
  app.require_subcommand(1);

  CommonFlags common;
  auto add_common = [&](CLI::App* sub, bool with_cache) {
    sub->add_option("--workers", common.workers, "Worker threads (0 = all cores)");
    if (with_cache) {
      sub->add_option("--cache-dir", common.cache_dir, "Gapset cache directory")
          ->envname("GAPSET_CACHE_DIR");
    }
  };

  EnumerateFlags enum_flags;
  auto* enumerate = app.add_subcommand("enumerate", "List every gapset of a genus");
  enumerate->add_option("--genus", enum_flags.genus, "Genus")->required()->check(
      CLI::NonNegativeNumber);
  enumerate->add_option("--kappa", enum_flags.kappa, "Keep kappa-sparse gapsets")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--pure", enum_flags.pure, "Require kappa to be attained");
  enumerate->add_option("--depth", enum_flags.depth, "Keep gapsets of this depth");
  enumerate->add_option("--format", enum_flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  add_common(enumerate, true);

  int         table_max = 0;
  std::string table_format = "markdown";
  auto* table = app.add_subcommand("table", "Counts of pure kappa-sparse gapsets");
  table->add_option("--max-genus", table_max, "Largest genus")->required()->check(
      CLI::NonNegativeNumber);
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"markdown", "csv"}));
  add_common(table, false);

  auto* sequence = app.add_subcommand("sequence", "Integer sequences");
  sequence->require_subcommand(1);
  int   ng_max = 0;
  auto* ng     = sequence->add_subcommand("ng", "Number of gapsets per genus");
  ng->add_option("--max-genus", ng_max, "Largest genus")->required()->check(
      CLI::NonNegativeNumber);
  add_common(ng, false);
  int   gw_max = 0;
  auto* gw     = sequence->add_subcommand("gw", "g_w = #G_{2w}(3w) with ratios");
  gw->add_option("--max-w", gw_max, "Largest w")->required()->check(
      CLI::NonNegativeNumber);
  add_common(gw, false);

  MapFlags map_flags;
  auto*    map = app.add_subcommand("map", "Apply phi, sigma or phi-inverse");
  map->add_option("--gapset", map_flags.gapset, "Comma-separated elements")
      ->required();
  map->add_option("--op", map_flags.op, "Map to apply")
      ->check(CLI::IsMember({"phi", "sigma", "phi-inverse"}));
  map->add_option("--kappa", map_flags.kappa, "kappa of the input (phi-inverse)");

  int         verify_max = 0;
  std::string verify_suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--max-genus", verify_max, "Largest genus")->required()->check(
      CLI::NonNegativeNumber);
  verify->add_option("--suite", verify_suite, "Suite")
      ->check(CLI::IsMember({"core", "sparse", "phi", "bijection", "all"}));
  add_common(verify, true);

  std::string cache_action;
  int         cache_genus = 0;
  auto* cache = app.add_subcommand("cache", "Build or check a cached genus level");
  cache->add_option("action", cache_action, "store | check")
      ->required()
      ->check(CLI::IsMember({"store", "check"}));
  cache->add_option("--genus", cache_genus, "Genus")->required()->check(
      CLI::NonNegativeNumber);
  add_common(cache, true);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    if (*enumerate) {
      return cmd_enumerate(enum_flags, common);
    }
    if (*table) {
      return cmd_table(table_max, table_format, common);
    }
    if (*ng) {
      return cmd_sequence_ng(ng_max, common);
    }
    if (*gw) {
      return cmd_sequence_gw(gw_max, common);
    }
    if (*map) {
      return cmd_map(map_flags);
    }
    if (*verify) {
      return cmd_verify(verify_max, verify_suite, common);
    }
    if (*cache) {
      return cmd_cache(cache_action, cache_genus, common);
    }
  } catch (ResourceLimitError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadFlags;
  } catch (CacheError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitBadFlags;
}
