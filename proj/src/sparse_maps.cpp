#include "gapsets/sparse_maps.hpp"

#include <algorithm>  // for all_of, binary_search
#include <set>        // for set

#include "gapsets/errors.hpp"

namespace gapsets {

  std::string to_string(ImageClass c) {
    switch (c) {
      case ImageClass::gapset:
        return "gapset";
      case ImageClass::m_set_not_gapset:
        return "m-set-not-gapset";
      case ImageClass::not_m_set:
        return "not-m-set";
    }
    return "?";
  }

  std::string to_string(AlphaPosition p) {
    switch (p) {
      case AlphaPosition::both_in_penultimate_block:
        return "both-in-Gq2";
      case AlphaPosition::both_in_last_block:
        return "both-in-Gq1";
      case AlphaPosition::split:
        return "split";
    }
    return "?";
  }

  PhiImage phi(Gapset const& gapset) {
    std::vector<int> image;
    if (gapset.empty()) {
      image = {1};
    } else if (gapset.genus() == 1) {
      image = {1, 3};
    } else {
      auto const elts  = gapset.elements();
      auto const alpha = static_cast<std::size_t>(*kappa_and_alpha(gapset).alpha);
      image.reserve(elts.size() + 1);
      image.push_back(1);
      for (std::size_t i = 0; i < elts.size(); ++i) {
        image.push_back(elts[i] + (i < alpha ? 1 : 2));
      }
    }
    GapCandidate elements(std::move(image));
    int const    claimed = multiplicity(gapset) + 1;
    auto const   verdict = classify_image(elements, claimed);
    return PhiImage{std::move(elements), verdict, claimed};
  }

  ImageClass classify_image(GapCandidate const& image, int claimed_multiplicity) {
    if (std::holds_alternative<Gapset>(validate_gapset(image))) {
      return ImageClass::gapset;
    }
    return is_m_set(image, claimed_multiplicity) ? ImageClass::m_set_not_gapset
                                                 : ImageClass::not_m_set;
  }

  Gapset phi_inverse(Gapset const& image, int kappa_plus_1) {
    if (image.empty()) {
      throw PreconditionError("the empty gapset is not in the image of phi");
    }
    auto const [kappa, alpha] = kappa_and_alpha(image);
    if (kappa != kappa_plus_1) {
      throw PreconditionError(to_string(image) + " is pure "
                              + std::to_string(kappa) + "-sparse, not "
                              + std::to_string(kappa_plus_1) + "-sparse");
    }
    int const g = image.genus() - 1;
    if (2 * g > 3 * (kappa_plus_1 - 1)) {
      throw PreconditionError("phi_inverse needs 2g <= 3*kappa, got g="
                              + std::to_string(g) + ", kappa="
                              + std::to_string(kappa_plus_1 - 1));
    }
    if (image.genus() == 1) {
      return Gapset();
    }
    auto const       elts = image.elements();
    auto const       a    = static_cast<std::size_t>(*alpha);
    std::vector<int> preimage;
    preimage.reserve(elts.size() - 1);
    // Positions 2..alpha shift down by 1, positions alpha+1.. by 2.
    for (std::size_t i = 1; i < elts.size(); ++i) {
      preimage.push_back(elts[i] - (i < a ? 1 : 2));
    }
    GapCandidate candidate(std::move(preimage));
    auto         verdict = validate_gapset(candidate);
    if (auto const* witness = std::get_if<RejectionWitness>(&verdict)) {
      throw TheoremViolation("phi_inverse(" + to_string(image) + ") = "
                             + to_string(candidate)
                             + " is not a gapset, witness "
                             + to_string(*witness));
    }
    return std::get<Gapset>(std::move(verdict));
  }

  GapCandidate sigma(Gapset const& gapset) {
    if (gapset.empty()) {
      return GapCandidate{1};
    }
    int const q = depth(gapset);
    if (q > 3) {
      throw UnsupportedDepthError("sigma is defined for depth <= 3, got "
                                  + std::to_string(q));
    }
    auto const       partition = canonical_partition(gapset);
    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(gapset.genus()) + 1);
    for (std::size_t i = 0; i < partition.size(); ++i) {
      for (int x : partition.block(i)) {
        image.push_back(x + static_cast<int>(i));
      }
      if (i == 0) {
        image.push_back(partition.multiplicity());
      }
    }
    return GapCandidate(std::move(image));
  }

  bool BijectionReport::bijective() const noexcept {
    auto all = [](std::vector<bool> const& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return counts_equal() && images_distinct && all(forward_round_trip)
           && all(backward_round_trip) && all(image_membership);
  }

  BijectionReport verify_bijection(int                     genus,
                                   int                     kappa,
                                   std::span<Gapset const> level_g,
                                   std::span<Gapset const> level_g_plus_1) {
    if (genus < 0 || kappa < 0 || 2 * genus > 3 * kappa) {
      throw PreconditionError("verify_bijection needs 0 <= g and 2g <= 3*kappa,"
                              " got g=" + std::to_string(genus) + ", kappa="
                              + std::to_string(kappa));
    }
    auto const source = filter_pure_sparse(level_g, kappa);
    auto const target = filter_pure_sparse(level_g_plus_1, kappa + 1);

    BijectionReport report{genus,
                           kappa,
                           source.size(),
                           target.size(),
                           {},
                           {},
                           {},
                           true};
    std::set<GapCandidate> images;
    for (auto const& g : source) {
      auto const image   = phi(g);
      bool const member  = image.classification == ImageClass::gapset
                          && std::binary_search(target.begin(),
                                                target.end(),
                                                checked_gapset(image.elements));
      report.image_membership.push_back(member);
      report.images_distinct = images.insert(image.elements).second
                               && report.images_distinct;
      bool round_trip = false;
      if (member) {
        try {
          round_trip = phi_inverse(checked_gapset(image.elements), kappa + 1) == g;
        } catch (GapsetError const&) {
          round_trip = false;
        }
      }
      report.forward_round_trip.push_back(round_trip);
    }
    for (auto const& h : target) {
      bool round_trip = false;
      try {
        round_trip = phi(phi_inverse(h, kappa + 1)).elements == h.candidate();
      } catch (GapsetError const&) {
        round_trip = false;
      }
      report.backward_round_trip.push_back(round_trip);
    }
    return report;
  }

  BijectionReport verify_bijection(int                       genus,
                                   int                       kappa,
                                   EnumerationOptions const& options) {
    if (genus < 0 || kappa < 0 || 2 * genus > 3 * kappa) {
      throw PreconditionError("verify_bijection needs 0 <= g and 2g <= 3*kappa,"
                              " got g=" + std::to_string(genus) + ", kappa="
                              + std::to_string(kappa));
    }
    auto const level_g      = enumerate_gapsets(genus, options);
    auto const level_g_next = enumerate_gapsets(genus + 1, options);
    return verify_bijection(genus, kappa, level_g, level_g_next);
  }

  std::optional<AlphaPosition> classify_alpha_position(Gapset const& gapset) {
    if (gapset.genus() < 2) {
      throw PreconditionError("alpha position needs genus >= 2");
    }
    int const q = depth(gapset);
    if (q < 2) {
      throw PreconditionError("alpha position needs depth >= 2");
    }
    auto const partition = canonical_partition(gapset);
    auto const elts      = gapset.elements();
    auto const alpha     = static_cast<std::size_t>(*kappa_and_alpha(gapset).alpha);
    auto const lower     = partition.block_of(elts[alpha - 1]);
    auto const upper     = partition.block_of(elts[alpha]);
    auto const last      = static_cast<std::size_t>(q - 1);
    if (lower == last - 1 && upper == last - 1) {
      return AlphaPosition::both_in_penultimate_block;
    }
    if (lower == last && upper == last) {
      return AlphaPosition::both_in_last_block;
    }
    if (lower == last - 1 && upper == last) {
      return AlphaPosition::split;
    }
    return std::nullopt;
  }

}  // namespace gapsets
