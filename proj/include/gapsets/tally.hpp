#ifndef GAPSETS_TALLY_HPP_
#define GAPSETS_TALLY_HPP_

// Counting tables over genus levels: the (genus, kappa) grid of #G_kappa(g)
// with its row sums n_g, and the diagonal sequence g_w = #G_{2w}(3w).

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "enumerate.hpp"

namespace gapsets {

  class CountGrid {
   public:
    // rows[g][kappa] = #G_kappa(g) for kappa in [0, g].
    explicit CountGrid(std::vector<std::vector<std::uint64_t>> rows);

    int max_genus() const noexcept {
      return static_cast<int>(_rows.size()) - 1;
    }

    // Absent for kappa > g, and for kappa == 0 when g >= 1 (only the empty
    // gapset is pure 0-sparse).
    std::optional<std::uint64_t> cell(int genus, int kappa) const;

    // n_g.
    std::uint64_t row_sum(int genus) const;

    static bool is_diagonal(int genus, int kappa) noexcept {
      return 2 * genus == 3 * kappa;
    }

   private:
    std::vector<std::vector<std::uint64_t>> _rows;
  };

  // Throws ResourceLimitError if max_genus exceeds options.max_genus.
  CountGrid build_count_grid(int max_genus, EnumerationOptions const& options = {});

  struct Rational {
    std::uint64_t numerator;
    std::uint64_t denominator;

    double value() const noexcept {
      return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
  };

  // Rounded half-up to three decimals: 167/70 -> "2.386", 20/12 -> "1.667".
  std::string format_fixed3(Rational r);

  class DiagonalSequence {
   public:
    explicit DiagonalSequence(std::vector<std::uint64_t> terms);

    std::vector<std::uint64_t> const& terms() const noexcept {
      return _terms;
    }

    // g_w / g_{w-1}; absent for w = 0.
    std::optional<Rational> ratio(std::size_t w) const;

    // (g_0 + ... + g_w) / g_w.
    Rational cumulative_ratio(std::size_t w) const;

   private:
    std::vector<std::uint64_t> _terms;
  };

  // Terms for w = 0..max_w, each from a full enumeration of genus 3w.
  // Throws ResourceLimitError if 3*max_w exceeds options.max_genus.
  DiagonalSequence diagonal_sequence(int                       max_w,
                                     EnumerationOptions const& options = {});

  struct StabilizationViolation {
    int           genus;
    int           kappa;
    std::uint64_t count;
    std::uint64_t shifted_count;
  };

  struct StabilizationReport {
    std::size_t                         pairs_checked = 0;
    std::vector<StabilizationViolation> violations;
  };

  // For every (g, kappa) with 2g <= 3*kappa and g + 1 within the grid,
  // compares cell(g, kappa) with cell(g + 1, kappa + 1).
  StabilizationReport stabilization_check(CountGrid const& grid);

}  // namespace gapsets

#endif  // GAPSETS_TALLY_HPP_
