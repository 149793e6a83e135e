#ifndef GAPSETS_SPARSE_MAPS_HPP_
#define GAPSETS_SPARSE_MAPS_HPP_

// Genus-raising maps on pure kappa-sparse gapsets.
//
// phi sends G = {l_1 < ... < l_g} with max-gap index alpha to
//
//   {1, l_1 + 1, ..., l_alpha + 1, l_{alpha+1} + 2, ..., l_g + 2}
//
// which has g + 1 elements and largest consecutive difference kappa + 1.
// It is injective on G_kappa(g), and whenever 2g <= 3*kappa it is a bijection
// G_kappa(g) -> G_{kappa+1}(g+1) whose inverse is phi_inverse.
//
// sigma is the blockwise shift (G_0 ∪ {m}) ∪ (G_1 + 1) ∪ (G_2 + 2) on
// gapsets of depth at most 3; it also raises the genus by one but differs
// from phi in general.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "enumerate.hpp"
#include "gapset.hpp"

namespace gapsets {

  enum class ImageClass { gapset, m_set_not_gapset, not_m_set };

  std::string to_string(ImageClass c);

  // gapset if it validates, else m_set_not_gapset if it is a
  // claimed_multiplicity-set, else not_m_set.
  ImageClass classify_image(GapCandidate const& image, int claimed_multiplicity);

  struct PhiImage {
    GapCandidate elements;
    ImageClass   classification;
    // m(G) + 1, the multiplicity the image is tested against.
    int claimed_multiplicity;
  };

  // Conventions: phi({}) = {1}, phi({1}) = {1,3}.
  PhiImage phi(Gapset const& gapset);

  // Inverse of phi on G_{kappa+1}(g+1) for 2g <= 3*kappa, where g + 1 is the
  // genus of `image`. Throws PreconditionError if the image's kappa is not
  // kappa_plus_1 or the inequality fails, and TheoremViolation if the
  // constructed preimage is not a gapset.
  Gapset phi_inverse(Gapset const& image, int kappa_plus_1);

  // Throws UnsupportedDepthError for depth > 3. sigma({}) = {1}.
  GapCandidate sigma(Gapset const& gapset);

  struct BijectionReport {
    int         genus;
    int         kappa;
    std::size_t source_count;
    std::size_t target_count;
    // phi_inverse(phi(G)) == G, per source gapset (lexicographic order).
    std::vector<bool> forward_round_trip;
    // phi(phi_inverse(H)) == H, per target gapset.
    std::vector<bool> backward_round_trip;
    // phi(G) lies in G_{kappa+1}(g+1), per source gapset.
    std::vector<bool> image_membership;
    bool              images_distinct;

    bool counts_equal() const noexcept {
      return source_count == target_count;
    }

    bool bijective() const noexcept;
  };

  // Compares G_kappa(genus) with G_{kappa+1}(genus+1) materialized from the
  // enumerator. Throws PreconditionError unless 0 <= genus and
  // 2*genus <= 3*kappa.
  BijectionReport verify_bijection(int                       genus,
                                   int                       kappa,
                                   EnumerationOptions const& options = {});

  // As above with caller-supplied full genus levels (each lexicographically
  // sorted): all gapsets of genus g, and all of genus g + 1.
  BijectionReport verify_bijection(int                     genus,
                                   int                     kappa,
                                   std::span<Gapset const> level_g,
                                   std::span<Gapset const> level_g_plus_1);

  // Where the max-gap pair (l_alpha, l_{alpha+1}) sits relative to the last
  // two canonical blocks G_{q-2}, G_{q-1}.
  enum class AlphaPosition {
    both_in_penultimate_block,
    both_in_last_block,
    split
  };

  std::string to_string(AlphaPosition p);

  // Requires genus >= 2 and depth >= 2 (PreconditionError otherwise).
  // Returns nullopt if none of the three cases holds.
  std::optional<AlphaPosition> classify_alpha_position(Gapset const& gapset);

}  // namespace gapsets

#endif  // GAPSETS_SPARSE_MAPS_HPP_
