#include "gapsets/gapset.hpp"

#include <algorithm>  // for lexicographical_compare_three_way, binary_search
#include <bit>        // for countr_zero
#include <charconv>   // for from_chars
#include <ostream>    // for ostream
#include <stdexcept>  // for invalid_argument

#include "gapsets/errors.hpp"

namespace gapsets {

  ////////////////////////////////////////////////////////////////////////////
  // GapCandidate
  ////////////////////////////////////////////////////////////////////////////

  GapCandidate::GapCandidate(std::vector<int> elements)
      : _elements(std::move(elements)) {
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (_elements[i] < 1) {
        throw std::invalid_argument("gap candidate elements must be >= 1, got "
                                    + std::to_string(_elements[i]));
      }
      if (i > 0 && _elements[i] <= _elements[i - 1]) {
        throw std::invalid_argument(
            "gap candidate elements must be strictly increasing");
      }
    }
  }

  GapCandidate::GapCandidate(std::initializer_list<int> elements)
      : GapCandidate(std::vector<int>(elements)) {}

  bool GapCandidate::contains(int x) const noexcept {
    return std::binary_search(_elements.begin(), _elements.end(), x);
  }

  std::strong_ordering operator<=>(GapCandidate const& lhs,
                                   GapCandidate const& rhs) noexcept {
    return std::lexicographical_compare_three_way(lhs._elements.begin(),
                                                  lhs._elements.end(),
                                                  rhs._elements.begin(),
                                                  rhs._elements.end());
  }

  ////////////////////////////////////////////////////////////////////////////
  // Gapset
  ////////////////////////////////////////////////////////////////////////////

  Gapset::Gapset(GapMask mask) : _mask(mask) {
    _elements.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
      _elements.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
  }

  GapCandidate Gapset::candidate() const {
    return GapCandidate(_elements);
  }

  std::strong_ordering operator<=>(Gapset const& lhs,
                                   Gapset const& rhs) noexcept {
    return std::lexicographical_compare_three_way(lhs._elements.begin(),
                                                  lhs._elements.end(),
                                                  rhs._elements.begin(),
                                                  rhs._elements.end());
  }

  namespace detail {
    Gapset trusted_gapset(GapMask mask) {
      return Gapset(mask);
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////////

  ValidationResult validate_gapset(GapCandidate const& candidate) {
    for (int z : candidate.elements()) {
      for (int x = 1; x <= z / 2; ++x) {
        if (!candidate.contains(x) && !candidate.contains(z - x)) {
          return RejectionWitness{z, x, z - x};
        }
      }
    }
    GapMask mask = 0;
    for (int z : candidate.elements()) {
      if (z > kMaxElement) {
        throw ResourceLimitError("gapset element " + std::to_string(z)
                                 + " exceeds the supported maximum "
                                 + std::to_string(kMaxElement));
      }
      mask |= GapMask{1} << z;
    }
    return detail::trusted_gapset(mask);
  }

  Gapset checked_gapset(GapCandidate const& candidate) {
    auto result = validate_gapset(candidate);
    if (auto const* witness = std::get_if<RejectionWitness>(&result)) {
      throw std::invalid_argument(to_string(candidate) + " is not a gapset: "
                                  + to_string(*witness));
    }
    return std::get<Gapset>(std::move(result));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////////

  int multiplicity(Gapset const& gapset) noexcept {
    int m = 1;
    for (int x : gapset.elements()) {
      if (x != m) {
        break;
      }
      ++m;
    }
    return m;
  }

  int conductor(Gapset const& gapset) noexcept {
    return gapset.empty() ? 0 : gapset.elements().back() + 1;
  }

  int depth(Gapset const& gapset) noexcept {
    int const c = conductor(gapset);
    int const m = multiplicity(gapset);
    return (c + m - 1) / m;
  }

  KappaAlpha kappa_and_alpha(Gapset const& gapset) noexcept {
    auto const elts = gapset.elements();
    if (elts.size() < 2) {
      return {static_cast<int>(elts.size()), std::nullopt};
    }
    int kappa = 0;
    int alpha = 0;
    for (std::size_t i = 0; i + 1 < elts.size(); ++i) {
      int const diff = elts[i + 1] - elts[i];
      if (diff >= kappa) {
        kappa = diff;
        alpha = static_cast<int>(i) + 1;
      }
    }
    return {kappa, alpha};
  }

  InvariantRecord invariants(Gapset const& gapset) noexcept {
    auto const [kappa, alpha] = kappa_and_alpha(gapset);
    int const c = conductor(gapset);
    return InvariantRecord{gapset.genus(),
                           multiplicity(gapset),
                           c,
                           c - 1,
                           depth(gapset),
                           kappa,
                           alpha};
  }

  int max_consecutive_difference(GapCandidate const& candidate) noexcept {
    auto const elts = candidate.elements();
    if (elts.size() < 2) {
      return static_cast<int>(elts.size());
    }
    int result = 0;
    for (std::size_t i = 0; i + 1 < elts.size(); ++i) {
      result = std::max(result, elts[i + 1] - elts[i]);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Canonical partition
  ////////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> CanonicalPartition::block_of(int x) const {
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      if (std::binary_search(_blocks[i].begin(), _blocks[i].end(), x)) {
        return i;
      }
    }
    return std::nullopt;
  }

  CanonicalPartition canonical_partition(Gapset const& gapset) {
    if (gapset.empty()) {
      throw PreconditionError(
          "the empty gapset has no canonical partition (depth 0)");
    }
    int const m = multiplicity(gapset);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(depth(gapset)));
    for (int x : gapset.elements()) {
      // Elements are never multiples of m, so x / m is the block index.
      blocks[static_cast<std::size_t>(x / m)].push_back(x);
    }
    return CanonicalPartition(m, std::move(blocks));
  }

  ////////////////////////////////////////////////////////////////////////////
  // m-sets and m-extensions
  ////////////////////////////////////////////////////////////////////////////

  bool is_m_set(GapCandidate const& candidate, int m) {
    if (m <= 0) {
      throw PreconditionError("m must be positive, got " + std::to_string(m));
    }
    auto const elts = candidate.elements();
    // Strictly increasing and >= 1, so [1, m-1] ⊆ c iff the first m-1
    // entries are exactly 1, ..., m-1.
    if (elts.size() < static_cast<std::size_t>(m - 1)) {
      return false;
    }
    for (int i = 1; i < m; ++i) {
      if (elts[static_cast<std::size_t>(i - 1)] != i) {
        return false;
      }
    }
    return std::none_of(
        elts.begin(), elts.end(), [m](int x) { return x % m == 0; });
  }

  bool is_m_extension(GapCandidate const& candidate, int m) {
    if (!is_m_set(candidate, m)) {
      return false;
    }
    // x ∈ A_i with i >= 1 must come from x - m ∈ A_{i-1}.
    return std::all_of(
        candidate.elements().begin(),
        candidate.elements().end(),
        [&](int x) { return x < m || candidate.contains(x - m); });
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////////

  namespace {
    std::string braces(std::span<int const> elts) {
      std::string out = "{";
      for (std::size_t i = 0; i < elts.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(elts[i]);
      }
      out += '}';
      return out;
    }
  }  // namespace

  std::string to_string(GapCandidate const& candidate) {
    return braces(candidate.elements());
  }

  std::string to_string(Gapset const& gapset) {
    return braces(gapset.elements());
  }

  std::string to_string(RejectionWitness const& witness) {
    return "(" + std::to_string(witness.sum) + "," + std::to_string(witness.left)
           + "," + std::to_string(witness.right) + ")";
  }

  std::ostream& operator<<(std::ostream& os, GapCandidate const& candidate) {
    return os << to_string(candidate);
  }

  std::ostream& operator<<(std::ostream& os, Gapset const& gapset) {
    return os << to_string(gapset);
  }

  GapCandidate parse_candidate(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
      if (text.back() != '}') {
        throw std::invalid_argument("unbalanced braces in gapset text");
      }
      text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> elements;
    if (text.empty()) {
      return GapCandidate(std::move(elements));
    }
    while (true) {
      auto const comma = text.find(',');
      auto const token = trim(text.substr(0, comma));
      int        value = 0;
      auto const [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{}
          || ptr != token.data() + token.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(token)
                                    + "'");
      }
      elements.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return GapCandidate(std::move(elements));
  }

}  // namespace gapsets
