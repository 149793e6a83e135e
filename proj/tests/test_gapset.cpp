#include <set>        // for set
#include <stdexcept>  // for invalid_argument
#include <vector>     // for vector

#include "doctest.h"

#include "gapsets/enumerate.hpp"
#include "gapsets/errors.hpp"
#include "gapsets/gapset.hpp"
#include "oracles.hpp"

using namespace gapsets;

namespace {

  GapCandidate from_set(oracle::Set const& s) {
    return GapCandidate(std::vector<int>(s.begin(), s.end()));
  }

  Gapset make(std::initializer_list<int> xs) {
    return checked_gapset(GapCandidate(xs));
  }

}  // namespace

TEST_SUITE("gapset") {
  TEST_CASE("candidates must be strictly increasing and positive") {
    CHECK_THROWS_AS(GapCandidate({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GapCandidate({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GapCandidate({0, 1}), std::invalid_argument);
    CHECK_NOTHROW(GapCandidate({}));
  }

  TEST_CASE("validate accepts and rejects with the smallest witness") {
    CHECK(std::holds_alternative<Gapset>(validate_gapset({})));
    CHECK(std::holds_alternative<Gapset>(validate_gapset({1})));
    CHECK(std::holds_alternative<Gapset>(validate_gapset({1, 2, 4, 7})));

    auto r = validate_gapset({1, 4});
    REQUIRE(std::holds_alternative<RejectionWitness>(r));
    auto w = std::get<RejectionWitness>(r);
    CHECK(w.sum == 4);
    CHECK(w.left == 2);
    CHECK(w.right == 2);
    CHECK(to_string(w) == "(4,2,2)");

    // 2 = 1 + 1 with 1 missing.
    w = std::get<RejectionWitness>(validate_gapset({2}));
    CHECK(w.sum == 2);
    CHECK(w.left == 1);

    // 6 = 1 + 5: 1 is in, fine; 6 = 2 + 4 with both missing.
    w = std::get<RejectionWitness>(validate_gapset({1, 3, 6}));
    CHECK(w.sum == 6);
    CHECK(w.left == 2);
    CHECK(w.right == 4);

    CHECK_THROWS_AS(checked_gapset({1, 4}), std::invalid_argument);
  }

  TEST_CASE("validate agrees with the naive definition on every subset of [1,10]") {
    for (unsigned bits = 0; bits < (1U << 10); ++bits) {
      oracle::Set s;
      for (int i = 0; i < 10; ++i) {
        if ((bits >> i) & 1U) {
          s.insert(i + 1);
        }
      }
      bool const lib = std::holds_alternative<Gapset>(validate_gapset(from_set(s)));
      CHECK_MESSAGE(lib == oracle::is_gapset(s), to_string(from_set(s)));
    }
  }

  TEST_CASE("elements above the representable range") {
    std::vector<int> odd;
    for (int x = 1; x <= 65; x += 2) {
      odd.push_back(x);
    }
    CHECK_THROWS_AS(validate_gapset(GapCandidate(odd)), ResourceLimitError);
  }

  TEST_CASE("invariants of the empty gapset") {
    auto const inv = invariants(Gapset());
    CHECK(inv.genus == 0);
    CHECK(inv.multiplicity == 1);
    CHECK(inv.conductor == 0);
    CHECK(inv.frobenius == -1);
    CHECK(inv.depth == 0);
    CHECK(inv.kappa == 0);
    CHECK_FALSE(inv.alpha.has_value());
  }

  TEST_CASE("ordinary and hyperelliptic gapsets") {
    for (int g = 1; g <= 20; ++g) {
      std::vector<int> ordinary;
      std::vector<int> hyper;
      for (int i = 1; i <= g; ++i) {
        ordinary.push_back(i);
        hyper.push_back(2 * i - 1);
      }
      auto const o = invariants(checked_gapset(GapCandidate(ordinary)));
      CHECK(o.multiplicity == g + 1);
      CHECK(o.conductor == g + 1);
      CHECK(o.depth == 1);
      CHECK(o.kappa == 1);

      auto const h = invariants(checked_gapset(GapCandidate(hyper)));
      CHECK(h.multiplicity == 2);
      CHECK(h.conductor == 2 * g);
      CHECK(h.depth == g);
      CHECK(h.kappa == (g == 1 ? 1 : 2));
    }
  }

  TEST_CASE("invariants match a semigroup sieve") {
    std::vector<std::vector<int>> const generators = {
        {3, 5}, {4, 7}, {5, 6, 7}, {3, 7, 11}, {6, 9, 10, 11}, {7, 8}, {2, 9}};
    for (auto const& gens : generators) {
      auto const gaps = oracle::semigroup_gaps(gens);
      auto const g    = checked_gapset(from_set(gaps));
      auto const inv  = invariants(g);
      CHECK(inv.genus == static_cast<int>(gaps.size()));
      CHECK(inv.multiplicity == gens.front());
      CHECK(inv.conductor == oracle::conductor(gaps));
      CHECK(inv.frobenius == oracle::conductor(gaps) - 1);
      CHECK(inv.depth == oracle::depth(gaps));
      CHECK(inv.kappa == oracle::kappa(gaps));
      CHECK(inv.alpha == oracle::alpha(gaps));
    }
    // <3,5> has gaps {1,2,4,7}.
    CHECK(from_set(oracle::semigroup_gaps({3, 5})) == GapCandidate{1, 2, 4, 7});
    auto const inv = invariants(make({1, 2, 4, 7}));
    CHECK(inv.genus == 4);
    CHECK(inv.multiplicity == 3);
    CHECK(inv.conductor == 8);
    CHECK(inv.frobenius == 7);
    CHECK(inv.depth == 3);
    CHECK(inv.kappa == 3);
    CHECK(inv.alpha == 3);
  }

  TEST_CASE("kappa and alpha conventions") {
    CHECK(kappa_and_alpha(Gapset()) == KappaAlpha{0, std::nullopt});
    CHECK(kappa_and_alpha(make({1})) == KappaAlpha{1, std::nullopt});
    CHECK(kappa_and_alpha(make({1, 3})) == KappaAlpha{2, 1});
    CHECK(kappa_and_alpha(make({1, 3, 5})) == KappaAlpha{2, 2});
    CHECK(kappa_and_alpha(make({1, 2, 3, 5, 6, 10})) == KappaAlpha{4, 5});
    CHECK(max_consecutive_difference({}) == 0);
    CHECK(max_consecutive_difference({7}) == 1);
    CHECK(max_consecutive_difference({1, 2, 9}) == 7);
  }

  TEST_CASE("invariants agree with the oracle on all gapsets up to genus 10") {
    for (int g = 0; g <= 10; ++g) {
      for (auto const& s : enumerate_gapsets(g)) {
        std::vector<int> v(s.elements().begin(), s.elements().end());
        oracle::Set const set(v.begin(), v.end());
        auto const        inv = invariants(s);
        CHECK(inv.multiplicity == oracle::multiplicity(set));
        CHECK(inv.conductor == oracle::conductor(set));
        CHECK(inv.depth == oracle::depth(set));
        CHECK(inv.kappa == oracle::kappa(set));
        CHECK(inv.alpha == oracle::alpha(set));
      }
    }
  }

  TEST_CASE("canonical partition") {
    auto const p = canonical_partition(make({1, 2, 4, 7}));
    CHECK(p.multiplicity() == 3);
    REQUIRE(p.size() == 3);
    CHECK(p.block(0) == std::vector<int>{1, 2});
    CHECK(p.block(1) == std::vector<int>{4});
    CHECK(p.block(2) == std::vector<int>{7});
    CHECK(p.block_of(4) == 1U);
    CHECK_FALSE(p.block_of(5).has_value());

    // [1,9] u {11,19} u {21}, m = 10.
    auto const q = canonical_partition(make({1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 19, 21}));
    REQUIRE(q.size() == 3);
    CHECK(q.block(1) == std::vector<int>{11, 19});
    CHECK(q.block(2) == std::vector<int>{21});

    CHECK(canonical_partition(make({1, 2, 3})).size() == 1);
    CHECK_THROWS_AS(canonical_partition(Gapset()), PreconditionError);
  }

  TEST_CASE("m-sets and m-extensions") {
    CHECK(is_m_set({1, 2, 4, 7}, 3));
    CHECK_FALSE(is_m_set({1, 2, 3, 7}, 3));
    CHECK_FALSE(is_m_set({1, 4}, 3));
    CHECK(is_m_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 14, 15, 18, 19, 24, 30}, 11));
    CHECK(is_m_set({}, 1));
    CHECK(is_m_set({1, 3}, 2));
    CHECK_THROWS_AS(is_m_set({1}, 0), PreconditionError);

    CHECK(is_m_extension({1, 2, 4, 5, 7}, 3));
    CHECK_FALSE(is_m_extension({1, 2, 4, 7, 8}, 3));
    CHECK_FALSE(is_m_extension({1, 2, 7}, 3));
    CHECK(is_m_extension({1, 2, 4, 7}, 3));
  }

  TEST_CASE("parsing and printing") {
    CHECK(parse_candidate("1,2,4,7") == GapCandidate{1, 2, 4, 7});
    CHECK(parse_candidate("{1, 2, 4, 7}") == GapCandidate{1, 2, 4, 7});
    CHECK(parse_candidate("").empty());
    CHECK(parse_candidate("{}").empty());
    CHECK_THROWS_AS(parse_candidate("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_candidate("3,1"), std::invalid_argument);
    CHECK(to_string(make({1, 2, 4, 7})) == "{1,2,4,7}");
    CHECK(to_string(Gapset()) == "{}");
  }

  TEST_CASE("lexicographic order of gapsets") {
    CHECK(make({1, 2, 3}) < make({1, 2, 4}));
    CHECK(make({1, 2, 5}) < make({1, 3, 5}));
    CHECK(mask_lex_less(make({1, 2, 3}).mask(), make({1, 2, 4}).mask()));
    CHECK_FALSE(mask_lex_less(make({1, 3, 5}).mask(), make({1, 2, 5}).mask()));
  }
}
