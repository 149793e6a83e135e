#include "gapsets/properties.hpp"

#include <map>  // for map
#include <set>  // for set

#include "gapsets/errors.hpp"
#include "gapsets/sparse_maps.hpp"
#include "gapsets/tally.hpp"

namespace gapsets {

  void SuiteReport::record(std::string const& check,
                           bool               passed,
                           std::string const& witness,
                           std::string const& detail) {
    ++_evaluations[check];
    if (!passed) {
      _violations.push_back({check, witness, detail});
    }
  }

  std::size_t SuiteReport::checks_run() const noexcept {
    std::size_t total = 0;
    for (auto const& [_, n] : _evaluations) {
      total += n;
    }
    return total;
  }

  void SuiteReport::absorb(SuiteReport const& other) {
    _gapsets_covered += other._gapsets_covered;
    for (auto const& [check, n] : other._evaluations) {
      _evaluations[check] += n;
    }
    _violations.insert(
        _violations.end(), other._violations.begin(), other._violations.end());
  }

  namespace {

    int ceil_div(int a, int b) {
      return (a + b - 1) / b;
    }

    // Depth of an m-set: ceil(largest element / m).
    int m_set_depth(GapCandidate const& c, int m) {
      return c.empty() ? 0 : ceil_div(c.elements().back(), m);
    }

    bool is_ordinary(Gapset const& g) {
      auto const e = g.elements();
      return !e.empty() && e.back() == g.genus();
    }

    bool is_hyperelliptic(Gapset const& g) {
      auto const e = g.elements();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 2 * static_cast<int>(i) + 1) {
          return false;
        }
      }
      return !e.empty();
    }

    int count_max_gap_pairs(Gapset const& g, int kappa) {
      auto const e = g.elements();
      int        n = 0;
      for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        n += (e[i + 1] - e[i] == kappa) ? 1 : 0;
      }
      return n;
    }

    std::string describe(InvariantRecord const& r) {
      return "g=" + std::to_string(r.genus) + " m=" + std::to_string(r.multiplicity)
             + " c=" + std::to_string(r.conductor) + " q=" + std::to_string(r.depth)
             + " kappa=" + std::to_string(r.kappa);
    }

  }  // namespace

  SuiteReport check_core_properties(std::span<Gapset const> gapsets) {
    SuiteReport report("core");
    report.add_covered(gapsets.size());
    for (auto const& gapset : gapsets) {
      auto const  inv  = invariants(gapset);
      auto const  w    = to_string(gapset);
      auto const  elts = gapset.elements();
      int const   g    = inv.genus;
      int const   m    = inv.multiplicity;
      int const   c    = inv.conductor;
      auto const  d    = describe(inv);

      auto const again = validate_gapset(gapset.candidate());
      report.record("revalidation",
                    std::holds_alternative<Gapset>(again)
                        && std::get<Gapset>(again) == gapset,
                    w);

      bool consistent = inv.frobenius == c - 1
                        && inv.depth == (c == 0 ? 0 : ceil_div(c, m))
                        && inv.alpha.has_value() == (g >= 2);
      if (inv.alpha) {
        auto const a = static_cast<std::size_t>(*inv.alpha);
        consistent   = consistent && elts[a] - elts[a - 1] == inv.kappa;
        for (std::size_t i = a; i + 1 < elts.size(); ++i) {
          consistent = consistent && elts[i + 1] - elts[i] < inv.kappa;
        }
      }
      report.record("invariant-consistency", consistent, w, d);

      if (g == 0) {
        report.record("empty-gapset-invariants",
                      m == 1 && c == 0 && inv.depth == 0 && inv.kappa == 0,
                      w,
                      d);
        continue;
      }

      report.record("multiplicity-bound", 2 <= m && m <= g + 1, w, d);
      report.record("conductor-bound", g + 1 <= c && c <= 2 * g, w, d);
      report.record("depth-bound", 1 <= inv.depth && inv.depth <= g, w, d);

      bool positions = true;
      for (int j = 1; j <= g; ++j) {
        int const l = elts[static_cast<std::size_t>(j - 1)];
        positions   = positions && j <= l && l <= 2 * j - 1;
      }
      report.record("element-position-bound", positions, w);

      // [a*m + l_j + 1, a*m + l_{j+1} - 1] holds no element, for all a >= 0.
      bool intervals = true;
      for (std::size_t j = 0; j + 1 < elts.size(); ++j) {
        for (int a = 0; a * m + elts[j] + 1 < c; ++a) {
          for (int x = a * m + elts[j] + 1; x <= a * m + elts[j + 1] - 1; ++x) {
            intervals = intervals && !gapset.contains(x);
          }
        }
      }
      report.record("translated-gap-intervals", intervals, w);

      auto const partition = canonical_partition(gapset);
      bool       shape     = static_cast<int>(partition.size()) == inv.depth
                   && partition.multiplicity() == m;
      std::size_t total = 0;
      for (std::size_t i = 0; shape && i < partition.size(); ++i) {
        auto const& block = partition.block(i);
        total += block.size();
        int const lo = static_cast<int>(i) * m + 1;
        int const hi = static_cast<int>(i + 1) * m - 1;
        for (int x : block) {
          shape = shape && lo <= x && x <= hi && gapset.contains(x);
        }
        if (i == 0) {
          shape = shape && static_cast<int>(block.size()) == m - 1;
        }
      }
      shape = shape && total == elts.size();
      report.record("canonical-partition-shape", shape, w, d);

      report.record("depth-one-iff-ordinary",
                    (inv.depth == 1) == is_ordinary(gapset),
                    w,
                    d);
      report.record("depth-genus-iff-hyperelliptic",
                    (inv.depth == g) == is_hyperelliptic(gapset),
                    w,
                    d);
    }
    return report;
  }

  SuiteReport check_sparse_properties(std::span<Gapset const> gapsets) {
    SuiteReport report("sparse");
    report.add_covered(gapsets.size());
    for (auto const& gapset : gapsets) {
      auto const inv   = invariants(gapset);
      auto const w     = to_string(gapset);
      auto const elts  = gapset.elements();
      auto const d     = describe(inv);
      int const  g     = inv.genus;
      int const  m     = inv.multiplicity;
      int const  kappa = inv.kappa;
      bool const dense = 2 * g <= 3 * kappa;

      report.record("kappa-le-multiplicity", kappa <= m, w, d);
      report.record("kappa-le-genus", kappa <= g, w, d);
      report.record("genus-plus-kappa-le-conductor", g + kappa <= inv.conductor, w, d);
      if (dense) {
        report.record("large-kappa-depth-le-3", inv.depth <= 3, w, d);
      }
      if (g < 2) {
        continue;
      }

      auto const a       = static_cast<std::size_t>(*inv.alpha);
      int const  l_alpha = elts[a - 1];

      bool index_bound = true;
      for (std::size_t i = 0; i + 1 < elts.size(); ++i) {
        if (elts[i + 1] - elts[i] == kappa) {
          index_bound = index_bound && kappa <= static_cast<int>(i) + 2;
        }
      }
      report.record("max-gap-index-bound", index_bound, w, d);
      report.record("last-element-le-alpha-plus-m", elts.back() <= l_alpha + m, w, d);

      if (inv.depth >= 2) {
        report.record("alpha-pair-position",
                      classify_alpha_position(gapset).has_value(),
                      w,
                      d);
      }
      if (dense) {
        static Gapset const exception = checked_gapset({1, 3, 5});
        if (gapset != exception) {
          report.record("large-kappa-unique-max-gap",
                        count_max_gap_pairs(gapset, kappa) == 1,
                        w,
                        d);
        }
        report.record("large-kappa-alpha-le-2m-1", l_alpha <= 2 * m - 1, w, d);
      }
    }
    return report;
  }

  SuiteReport check_phi_properties(std::span<Gapset const> gapsets) {
    SuiteReport report("phi");
    report.add_covered(gapsets.size());
    // (genus, kappa) -> images seen so far.
    std::map<std::pair<int, int>, std::set<GapCandidate>> images;
    for (auto const& gapset : gapsets) {
      auto const inv   = invariants(gapset);
      auto const w     = to_string(gapset);
      auto const elts  = gapset.elements();
      auto const image = phi(gapset);
      int const  g     = inv.genus;
      int const  m     = inv.multiplicity;
      int const  kappa = inv.kappa;
      auto const iw    = w + " -> " + to_string(image.elements);

      auto const& img = image.elements;
      report.record("phi-shape",
                    static_cast<int>(img.size()) == g + 1
                        && img.elements().back() <= 2 * g + 1
                        && max_consecutive_difference(img) == kappa + 1
                        && image.claimed_multiplicity == m + 1,
                    iw);
      report.record("phi-injective",
                    images[{g, kappa}].insert(img).second,
                    iw);

      auto const verdict    = validate_gapset(img);
      auto const* as_gapset = std::get_if<Gapset>(&verdict);
      report.record("phi-classification-consistent",
                    (image.classification == ImageClass::gapset)
                            == (as_gapset != nullptr)
                        && (image.classification == ImageClass::not_m_set)
                               == (as_gapset == nullptr && !is_m_set(img, m + 1)),
                    iw);

      // Every (m+1)-set inside [1, 2(m+1) - 1] is a gapset.
      if (is_m_set(img, m + 1) && img.elements().back() <= 2 * (m + 1) - 1) {
        report.record("m-set-lemma-on-images",
                      as_gapset != nullptr && multiplicity(*as_gapset) == m + 1
                          && depth(*as_gapset) <= 2,
                      iw);
      }

      switch (inv.depth) {
        case 1:
          report.record("phi-depth1-gapset-depth2",
                        as_gapset != nullptr && depth(*as_gapset) == 2,
                        iw);
          break;
        case 2:
          report.record("phi-depth2-m-set-depth2",
                        is_m_set(img, m + 1) && m_set_depth(img, m + 1) == 2,
                        iw);
          report.record("phi-depth2-image-in-class",
                        as_gapset != nullptr && as_gapset->genus() == g + 1
                            && kappa_and_alpha(*as_gapset).kappa == kappa + 1
                            && depth(*as_gapset) == 2,
                        iw);
          // [1,g] ∪ {g+2} is never the image of a depth-2 gapset.
          {
            std::vector<int> missing;
            for (int x = 1; x <= g; ++x) {
              missing.push_back(x);
            }
            missing.push_back(g + 2);
            report.record("phi-depth2-misses-ordinary-image",
                          img != GapCandidate(std::move(missing)),
                          iw);
          }
          break;
        case 3: {
          auto const l_alpha = elts[static_cast<std::size_t>(*inv.alpha) - 1];
          bool const excepted = gapset.contains(2 * m + 1) && l_alpha >= 2 * m + 1;
          if (!excepted) {
            report.record("phi-depth3-m-set-depth3",
                          is_m_set(img, m + 1) && m_set_depth(img, m + 1) == 3,
                          iw);
          }
          if (2 * g <= 3 * kappa) {
            report.record("phi-depth3-image-in-class",
                          as_gapset != nullptr && as_gapset->genus() == g + 1
                              && kappa_and_alpha(*as_gapset).kappa == kappa + 1
                              && depth(*as_gapset) == 3,
                          iw);
          }
          break;
        }
        default:
          break;
      }
    }
    return report;
  }

  SuiteReport check_m_set_lemma(int max_m) {
    SuiteReport report("m-set-lemma");
    for (int m = 1; m <= max_m; ++m) {
      // [1, m-1] plus any subset of [m+1, 2m-1]; the range holds no multiple
      // of m, so these are exactly the m-sets inside [1, 2m-1].
      int const free = std::max(m - 1, 0);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
        std::vector<int> elts;
        for (int x = 1; x < m; ++x) {
          elts.push_back(x);
        }
        for (int i = 0; i < free; ++i) {
          if ((bits >> i) & 1U) {
            elts.push_back(m + 1 + i);
          }
        }
        GapCandidate candidate(std::move(elts));
        auto const   verdict = validate_gapset(candidate);
        auto const*  gapset  = std::get_if<Gapset>(&verdict);
        report.record("m-set-in-2m-is-gapset",
                      is_m_set(candidate, m) && gapset != nullptr
                          && multiplicity(*gapset) == m && depth(*gapset) <= 2,
                      to_string(candidate),
                      "m=" + std::to_string(m));
      }
    }
    return report;
  }

  std::vector<Gapset> gapsets_up_to(int                       max_genus,
                                    EnumerationOptions const& options) {
    std::vector<Gapset> result;
    for (int g = 0; g <= max_genus; ++g) {
      auto level = enumerate_gapsets(g, options);
      result.insert(result.end(),
                    std::make_move_iterator(level.begin()),
                    std::make_move_iterator(level.end()));
    }
    return result;
  }

  SuiteReport check_bijection_properties(int                       max_genus,
                                         EnumerationOptions const& options) {
    SuiteReport report("bijection");
    std::vector<std::vector<Gapset>> levels;
    for (int g = 0; g <= max_genus + 1; ++g) {
      levels.push_back(enumerate_gapsets(g, options));
    }
    for (int g = 0; g <= max_genus; ++g) {
      report.add_covered(levels[static_cast<std::size_t>(g)].size());
      for (int kappa = 0; kappa <= g; ++kappa) {
        if (2 * g > 3 * kappa) {
          continue;
        }
        auto const r = verify_bijection(g,
                                        kappa,
                                        levels[static_cast<std::size_t>(g)],
                                        levels[static_cast<std::size_t>(g) + 1]);
        report.record("phi-bijective",
                      r.bijective(),
                      "(g=" + std::to_string(g) + ",kappa=" + std::to_string(kappa)
                          + ")",
                      std::to_string(r.source_count) + " vs "
                          + std::to_string(r.target_count));
      }
    }

    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t g = 0; g < levels.size(); ++g) {
      std::vector<std::uint64_t> row(g + 1, 0);
      for (auto const& gapset : levels[g]) {
        ++row[static_cast<std::size_t>(kappa_and_alpha(gapset).kappa)];
      }
      rows.push_back(std::move(row));
    }
    auto const stab = stabilization_check(CountGrid(std::move(rows)));
    std::size_t reported = 0;
    for (auto const& v : stab.violations) {
      report.record("count-stabilization",
                    false,
                    "(g=" + std::to_string(v.genus) + ",kappa="
                        + std::to_string(v.kappa) + ")",
                    std::to_string(v.count) + " vs " + std::to_string(v.shifted_count));
      ++reported;
    }
    for (; reported < stab.pairs_checked; ++reported) {
      report.record("count-stabilization", true);
    }
    return report;
  }

}  // namespace gapsets
