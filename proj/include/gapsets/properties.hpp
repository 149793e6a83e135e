#ifndef GAPSETS_PROPERTIES_HPP_
#define GAPSETS_PROPERTIES_HPP_

// Executable versions of the structural statements about gapsets, run over
// explicit collections (normally every gapset up to some genus). Each check
// has a stable kebab-case name; a report counts evaluations per check and
// keeps a witness for every failure, in the order the inputs were given.

#include <cstddef>  // for size_t
#include <map>      // for map
#include <span>     // for span
#include <string>   // for string
#include <vector>   // for vector

#include "enumerate.hpp"
#include "gapset.hpp"

namespace gapsets {

  struct Violation {
    std::string check;
    std::string witness;
    std::string detail;
  };

  class SuiteReport {
   public:
    explicit SuiteReport(std::string name) : _name(std::move(name)) {}

    std::string const& name() const noexcept {
      return _name;
    }

    void record(std::string const& check,
                bool               passed,
                std::string const& witness = {},
                std::string const& detail  = {});

    void add_covered(std::size_t n) noexcept {
      _gapsets_covered += n;
    }

    std::size_t gapsets_covered() const noexcept {
      return _gapsets_covered;
    }

    std::map<std::string, std::size_t> const& evaluations() const noexcept {
      return _evaluations;
    }

    std::size_t checks_run() const noexcept;

    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

    bool ok() const noexcept {
      return _violations.empty();
    }

    // Appends the other report's counters and violations.
    void absorb(SuiteReport const& other);

   private:
    std::string                        _name;
    std::size_t                        _gapsets_covered = 0;
    std::map<std::string, std::size_t> _evaluations;
    std::vector<Violation>             _violations;
  };

  // Invariant bounds, element positions, translated gap intervals, canonical
  // partition shape, depth 1 / depth g characterizations, re-validation.
  SuiteReport check_core_properties(std::span<Gapset const> gapsets);

  // Bounds on kappa, the position of the max-gap pair, and the 2g <= 3*kappa
  // regime (depth <= 3, unique max-gap pair, l_alpha <= 2m - 1).
  SuiteReport check_sparse_properties(std::span<Gapset const> gapsets);

  // Shape and injectivity of phi, and what its image is for depth 1, 2, 3.
  SuiteReport check_phi_properties(std::span<Gapset const> gapsets);

  // Every m-set inside [1, 2m - 1] is a gapset of multiplicity m and depth
  // at most 2, checked exhaustively for m = 1..max_m.
  SuiteReport check_m_set_lemma(int max_m);

  // phi is a bijection G_kappa(g) -> G_{kappa+1}(g+1) for every g <= max_genus
  // and 2g <= 3*kappa <= 3g, and the count grid stabilizes below the
  // diagonal. Enumerates up to genus max_genus + 1.
  SuiteReport check_bijection_properties(int                       max_genus,
                                         EnumerationOptions const& options = {});

  // Concatenation of all genus levels 0..max_genus, genus by genus.
  std::vector<Gapset> gapsets_up_to(int                       max_genus,
                                    EnumerationOptions const& options = {});

}  // namespace gapsets

#endif  // GAPSETS_PROPERTIES_HPP_
