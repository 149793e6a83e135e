#ifndef GAPSETS_GAPSET_HPP_
#define GAPSETS_GAPSET_HPP_

// Value types for gap sets of numerical semigroups, and exact computation of
// their invariants.
//
// A gapset G is a finite set of positive integers such that whenever z is in
// G and z = x + y with x, y >= 1, at least one of x and y is in G. These are
// exactly the complements (in N) of numerical semigroups.
//
// Elements are written l_1 < l_2 < ... < l_g, with g the genus. Indices used
// by this library (alpha, block numbers) follow that 1-based convention.

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint64_t
#include <initializer_list>  // for initializer_list
#include <iosfwd>            // for ostream
#include <optional>          // for optional
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <variant>           // for variant
#include <vector>            // for vector

namespace gapsets {

  // Bit x set <=> x is an element. Bit 0 is never set.
  using GapMask = std::uint64_t;

  // Largest element a Gapset can hold. Every gapset of genus g lies in
  // [1, 2g - 1], so this covers every genus up to 32.
  inline constexpr int kMaxElement = 63;

  // A strictly increasing sequence of positive integers with no further
  // structure; the input to validate_gapset and the output of maps whose
  // image need not be a gapset.
  class GapCandidate {
   public:
    GapCandidate() = default;

    // Throws std::invalid_argument unless strictly increasing and all >= 1.
    explicit GapCandidate(std::vector<int> elements);
    GapCandidate(std::initializer_list<int> elements);

    std::span<int const> elements() const noexcept {
      return _elements;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    bool empty() const noexcept {
      return _elements.empty();
    }

    bool contains(int x) const noexcept;

    friend bool operator==(GapCandidate const&, GapCandidate const&) = default;
    friend std::strong_ordering operator<=>(GapCandidate const& lhs,
                                            GapCandidate const& rhs) noexcept;

   private:
    std::vector<int> _elements;
  };

  class Gapset;

  namespace detail {
    // Bypasses validation. Only for producers that construct gapsets by a
    // route that is correct by construction (the semigroup tree).
    Gapset trusted_gapset(GapMask mask);
  }  // namespace detail

  class Gapset {
   public:
    // The empty gapset (complement of N_0).
    Gapset() = default;

    std::span<int const> elements() const noexcept {
      return _elements;
    }

    int genus() const noexcept {
      return static_cast<int>(_elements.size());
    }

    bool empty() const noexcept {
      return _elements.empty();
    }

    GapMask mask() const noexcept {
      return _mask;
    }

    bool contains(int x) const noexcept {
      return x >= 1 && x <= kMaxElement && ((_mask >> x) & 1U) != 0;
    }

    GapCandidate candidate() const;

    friend bool operator==(Gapset const& lhs, Gapset const& rhs) noexcept {
      return lhs._mask == rhs._mask;
    }

    // Lexicographic on the element sequences.
    friend std::strong_ordering operator<=>(Gapset const& lhs,
                                            Gapset const& rhs) noexcept;

   private:
    explicit Gapset(GapMask mask);

    friend Gapset detail::trusted_gapset(GapMask);

    GapMask          _mask = 0;
    std::vector<int> _elements;
  };

  // Result of a failed validation: z is in the candidate, z = x + y with
  // 1 <= x <= y, and neither x nor y is in the candidate.
  struct RejectionWitness {
    int sum;
    int left;
    int right;

    friend bool operator==(RejectionWitness const&, RejectionWitness const&)
        = default;
  };

  using ValidationResult = std::variant<Gapset, RejectionWitness>;

  // Returns the gapset, or the smallest failing (z, x) pair in lexicographic
  // order. Throws ResourceLimitError if the candidate is a gapset with an
  // element above kMaxElement.
  ValidationResult validate_gapset(GapCandidate const& candidate);

  // As validate_gapset, but throws std::invalid_argument on rejection.
  Gapset checked_gapset(GapCandidate const& candidate);

  // Exact integer-valued bundle of invariants. frobenius is -1 for the empty
  // gapset; alpha is present iff genus >= 2.
  struct InvariantRecord {
    int                genus;
    int                multiplicity;
    int                conductor;
    int                frobenius;
    int                depth;
    int                kappa;
    std::optional<int> alpha;

    friend bool operator==(InvariantRecord const&, InvariantRecord const&)
        = default;
  };

  struct KappaAlpha {
    int                kappa;
    std::optional<int> alpha;

    friend bool operator==(KappaAlpha const&, KappaAlpha const&) = default;
  };

  int multiplicity(Gapset const& gapset) noexcept;
  int conductor(Gapset const& gapset) noexcept;
  int depth(Gapset const& gapset) noexcept;

  // kappa is the largest distance between consecutive elements, with the
  // conventions kappa({}) = 0 and kappa({1}) = 1. alpha is the largest
  // 1-based index i with l_{i+1} - l_i = kappa.
  KappaAlpha kappa_and_alpha(Gapset const& gapset) noexcept;

  InvariantRecord invariants(Gapset const& gapset) noexcept;

  // Blocks G_i = G ∩ [i*m + 1, (i+1)*m - 1] for i = 0, ..., depth - 1.
  class CanonicalPartition {
   public:
    CanonicalPartition(int multiplicity, std::vector<std::vector<int>> blocks)
        : _multiplicity(multiplicity), _blocks(std::move(blocks)) {}

    int multiplicity() const noexcept {
      return _multiplicity;
    }

    std::vector<std::vector<int>> const& blocks() const noexcept {
      return _blocks;
    }

    std::size_t size() const noexcept {
      return _blocks.size();
    }

    std::vector<int> const& block(std::size_t i) const {
      return _blocks.at(i);
    }

    // Index of the block whose value range holds x, if x is an element.
    std::optional<std::size_t> block_of(int x) const;

   private:
    int                           _multiplicity;
    std::vector<std::vector<int>> _blocks;
  };

  // Throws PreconditionError for the empty gapset.
  CanonicalPartition canonical_partition(Gapset const& gapset);

  // [1, m-1] is contained in the set and no element is a multiple of m. Any
  // m >= 1 is accepted; m <= 0 throws PreconditionError.
  bool is_m_set(GapCandidate const& candidate, int m);

  // An m-set whose range blocks A_i = A ∩ [i*m + 1, (i+1)*m - 1] satisfy
  // A_{i+1} ⊆ m + A_i.
  bool is_m_extension(GapCandidate const& candidate, int m);

  // Largest gap between consecutive elements, using the same conventions as
  // kappa_and_alpha for sizes 0 and 1.
  int max_consecutive_difference(GapCandidate const& candidate) noexcept;

  // "{1,2,4,7}"
  std::string to_string(GapCandidate const& candidate);
  std::string to_string(Gapset const& gapset);
  std::string to_string(RejectionWitness const& witness);

  std::ostream& operator<<(std::ostream& os, GapCandidate const& candidate);
  std::ostream& operator<<(std::ostream& os, Gapset const& gapset);

  // Accepts "1,2,4,7", "{1, 2, 4, 7}", "" and "{}". Throws
  // std::invalid_argument on anything else.
  GapCandidate parse_candidate(std::string_view text);

  // Lexicographic comparison of two equal-genus masks.
  inline bool mask_lex_less(GapMask lhs, GapMask rhs) noexcept {
    GapMask const diff = lhs ^ rhs;
    return diff != 0 && (lhs & (diff & (~diff + 1))) != 0;
  }

}  // namespace gapsets

#endif  // GAPSETS_GAPSET_HPP_
