#include "gapsets/tally.hpp"

#include <algorithm>  // for min
#include <numeric>    // for accumulate

#include "gapsets/errors.hpp"

namespace gapsets {

  CountGrid::CountGrid(std::vector<std::vector<std::uint64_t>> rows)
      : _rows(std::move(rows)) {
    for (std::size_t g = 0; g < _rows.size(); ++g) {
      _rows[g].resize(g + 1, 0);
    }
  }

  std::optional<std::uint64_t> CountGrid::cell(int genus, int kappa) const {
    if (genus < 0 || genus > max_genus() || kappa < 0 || kappa > genus
        || (kappa == 0 && genus > 0)) {
      return std::nullopt;
    }
    return _rows[static_cast<std::size_t>(genus)][static_cast<std::size_t>(kappa)];
  }

  std::uint64_t CountGrid::row_sum(int genus) const {
    auto const& row = _rows.at(static_cast<std::size_t>(genus));
    return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
  }

  CountGrid build_count_grid(int max_genus, EnumerationOptions const& options) {
    if (max_genus < 0) {
      throw PreconditionError("max genus must be non-negative");
    }
    if (max_genus > std::min(options.max_genus, kHardGenusCeiling)) {
      throw ResourceLimitError("max genus " + std::to_string(max_genus)
                               + " exceeds the configured ceiling");
    }
    std::vector<std::vector<std::uint64_t>> rows;
    for (int g = 0; g <= max_genus; ++g) {
      std::vector<std::uint64_t> row(static_cast<std::size_t>(g) + 1, 0);
      for_each_gapset(
          g,
          [&](Gapset const& gapset) {
            ++row[static_cast<std::size_t>(kappa_and_alpha(gapset).kappa)];
          },
          options);
      rows.push_back(std::move(row));
    }
    return CountGrid(std::move(rows));
  }

  std::string format_fixed3(Rational r) {
    // round(1000 * n / d) with ties going up.
    std::uint64_t const scaled = r.numerator * 1000;
    std::uint64_t       units  = scaled / r.denominator;
    if (2 * (scaled % r.denominator) >= r.denominator) {
      ++units;
    }
    std::string frac = std::to_string(units % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    return std::to_string(units / 1000) + "." + frac;
  }

  DiagonalSequence::DiagonalSequence(std::vector<std::uint64_t> terms)
      : _terms(std::move(terms)) {}

  std::optional<Rational> DiagonalSequence::ratio(std::size_t w) const {
    if (w == 0) {
      return std::nullopt;
    }
    return Rational{_terms.at(w), _terms.at(w - 1)};
  }

  Rational DiagonalSequence::cumulative_ratio(std::size_t w) const {
    std::uint64_t const sum = std::accumulate(
        _terms.begin(), _terms.begin() + static_cast<std::ptrdiff_t>(w) + 1,
        std::uint64_t{0});
    return Rational{sum, _terms.at(w)};
  }

  DiagonalSequence diagonal_sequence(int                       max_w,
                                     EnumerationOptions const& options) {
    if (max_w < 0) {
      throw PreconditionError("max w must be non-negative");
    }
    if (3 * max_w > std::min(options.max_genus, kHardGenusCeiling)) {
      throw ResourceLimitError("genus " + std::to_string(3 * max_w)
                               + " exceeds the configured ceiling");
    }
    std::vector<std::uint64_t> terms;
    for (int w = 0; w <= max_w; ++w) {
      std::uint64_t count = 0;
      for_each_gapset(
          3 * w,
          [&](Gapset const& g) {
            if (kappa_and_alpha(g).kappa == 2 * w) {
              ++count;
            }
          },
          options);
      terms.push_back(count);
    }
    return DiagonalSequence(std::move(terms));
  }

  StabilizationReport stabilization_check(CountGrid const& grid) {
    StabilizationReport report;
    for (int g = 0; g < grid.max_genus(); ++g) {
      for (int kappa = 0; kappa <= g; ++kappa) {
        if (2 * g > 3 * kappa) {
          continue;
        }
        auto const here = grid.cell(g, kappa);
        auto const next = grid.cell(g + 1, kappa + 1);
        if (!here || !next) {
          continue;
        }
        ++report.pairs_checked;
        if (*here != *next) {
          report.violations.push_back({g, kappa, *here, *next});
        }
      }
    }
    return report;
  }

}  // namespace gapsets
