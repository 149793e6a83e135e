#include <cmath>    // for fabs
#include <cstdint>  // for uint64_t
#include <fstream>  // for ifstream
#include <optional> // for optional
#include <sstream>  // for stringstream
#include <string>   // for string, getline
#include <vector>   // for vector

#include "doctest.h"

#include "gapsets/errors.hpp"
#include "gapsets/properties.hpp"
#include "gapsets/render.hpp"
#include "gapsets/tally.hpp"

using namespace gapsets;

namespace {

  struct PublishedRow {
    std::vector<std::optional<std::uint64_t>> cells;
    std::uint64_t                             n_g;
  };

  // Transcription of the published count table, one CSV row per genus.
  std::vector<PublishedRow> load_published_table() {
    std::ifstream in(GAPSETS_TEST_DATA "/kappa_counts_g19.csv");
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    std::vector<PublishedRow> rows;
    while (std::getline(in, line)) {
      std::vector<std::string> fields;
      std::stringstream        ss(line);
      std::string              field;
      while (std::getline(ss, field, ',')) {
        fields.push_back(field);
      }
      if (line.back() == ',') {
        fields.emplace_back();
      }
      REQUIRE(fields.size() == 22);
      PublishedRow row;
      for (std::size_t k = 1; k <= 20; ++k) {
        row.cells.push_back(fields[k].empty()
                                ? std::nullopt
                                : std::optional<std::uint64_t>(std::stoull(fields[k])));
      }
      row.n_g = std::stoull(fields[21]);
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace

TEST_SUITE("tally") {
  TEST_CASE("published table is internally consistent") {
    auto const rows = load_published_table();
    REQUIRE(rows.size() == 20);
    for (auto const& row : rows) {
      std::uint64_t sum = 0;
      for (auto const& c : row.cells) {
        sum += c.value_or(0);
      }
      CHECK(sum == row.n_g);
    }
  }

  TEST_CASE("count grid reproduces every published cell up to genus 19") {
    auto const rows = load_published_table();
    auto const grid = build_count_grid(19);
    CHECK(grid.max_genus() == 19);
    for (int g = 0; g <= 19; ++g) {
      auto const& row = rows[static_cast<std::size_t>(g)];
      for (int k = 0; k <= 19; ++k) {
        CHECK_MESSAGE(grid.cell(g, k) == row.cells[static_cast<std::size_t>(k)],
                      "g=" << g << " kappa=" << k);
      }
      CHECK(grid.row_sum(g) == row.n_g);
    }
    CHECK(grid.cell(7, 3) == 12U);
    CHECK(grid.cell(12, 8) == 30U);
    CHECK(grid.cell(19, 2) == 413U);
    CHECK(grid.cell(18, 12) == 167U);
    CHECK(grid.cell(5, 5) == 1U);
    CHECK_FALSE(grid.cell(3, 4).has_value());
    CHECK_FALSE(grid.cell(3, 0).has_value());
  }

  TEST_CASE("small grids and limits") {
    auto const g0 = build_count_grid(0);
    CHECK(g0.max_genus() == 0);
    CHECK(g0.cell(0, 0) == 1U);
    CHECK_THROWS_AS(build_count_grid(31), ResourceLimitError);
  }

  TEST_CASE("diagonal cells") {
    CHECK(CountGrid::is_diagonal(0, 0));
    CHECK(CountGrid::is_diagonal(6, 4));
    CHECK_FALSE(CountGrid::is_diagonal(7, 4));
  }

  TEST_CASE("diagonal sequence through w = 7") {
    auto const seq = diagonal_sequence(7);
    CHECK(seq.terms() == std::vector<std::uint64_t>{1, 2, 5, 12, 30, 70, 167, 395});
    CHECK_FALSE(seq.ratio(0).has_value());

    char const* const ratios[] = {"", "2.000", "2.500", "2.400", "2.500", "2.333",
                                  "2.386", "2.365"};
    double const cumulative[] = {1, 1.5, 1.6, 1.667, 1.667, 1.714, 1.719, 1.727};
    for (std::size_t w = 1; w <= 7; ++w) {
      CHECK(format_fixed3(*seq.ratio(w)) == ratios[w]);
    }
    for (std::size_t w = 0; w <= 7; ++w) {
      CHECK(std::fabs(seq.cumulative_ratio(w).value() - cumulative[w]) <= 0.001);
    }
    CHECK(format_fixed3(seq.cumulative_ratio(3)) == "1.667");
    CHECK(seq.cumulative_ratio(3).numerator == 20);
    CHECK(seq.cumulative_ratio(3).denominator == 12);
    CHECK_THROWS_AS(diagonal_sequence(11), ResourceLimitError);
  }

  TEST_CASE("diagonal terms agree with the bold grid cells") {
    auto const grid = build_count_grid(18);
    auto const seq  = diagonal_sequence(6);
    for (int w = 0; w <= 6; ++w) {
      CHECK(grid.cell(3 * w, 2 * w) == seq.terms()[static_cast<std::size_t>(w)]);
    }
  }

  TEST_CASE("format_fixed3 rounds half up") {
    CHECK(format_fixed3({1, 1}) == "1.000");
    CHECK(format_fixed3({7, 3}) == "2.333");
    CHECK(format_fixed3({5, 3}) == "1.667");
    CHECK(format_fixed3({1, 2000}) == "0.001");
    CHECK(format_fixed3({1, 2001}) == "0.000");
    CHECK(format_fixed3({2, 1}) == "2.000");
  }

  TEST_CASE("stabilization on the full grid") {
    auto const report = stabilization_check(build_count_grid(19));
    CHECK(report.pairs_checked > 0);
    CHECK(report.violations.empty());

    // A doctored grid is caught.
    std::vector<std::vector<std::uint64_t>> rows = {{1}, {0, 1}, {0, 1, 1}, {0, 1, 2, 1}};
    rows[3][3] = 9;
    auto const bad = stabilization_check(CountGrid(rows));
    CHECK_FALSE(bad.violations.empty());
  }
}

TEST_SUITE("render") {
  TEST_CASE("markdown grid matches the golden file") {
    std::ifstream in(GAPSETS_TEST_DATA "/kappa_counts_g19.md");
    REQUIRE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(render_grid_markdown(build_count_grid(19)) == golden.str());
  }

  TEST_CASE("csv grid") {
    auto const csv = render_grid_csv(build_count_grid(2));
    CHECK(csv == "g,0,1,2,n_g\n0,1,,,1\n1,,1,,1\n2,,1,1,2\n");
  }

  TEST_CASE("genus counts and diagonal table") {
    CHECK(render_genus_counts(build_count_grid(3)) == "g,n_g\n0,1\n1,1\n2,2\n3,4\n");
    CHECK(render_diagonal(diagonal_sequence(0)) == "w,g_w,ratio,cumulative\n0,1,-,1.000\n");
    auto const text = render_diagonal(diagonal_sequence(6));
    CHECK(text.find("\n6,167,2.386,1.719\n") != std::string::npos);
  }

  TEST_CASE("records round-trip through json and csv") {
    for (int g = 0; g <= 9; ++g) {
      for (auto const& s : enumerate_gapsets(g)) {
        CHECK(parse_record_json(record_json(s)) == s);
        CHECK(parse_record_csv(record_csv(s)) == s);
      }
    }
    auto const s = checked_gapset({1, 2, 4, 7});
    CHECK(record_json(s)
          == R"({"alpha":3,"conductor":8,"depth":3,"frobenius":7,"gaps":[1,2,4,7],)"
             R"("genus":4,"kappa":3,"multiplicity":3})");
    CHECK(record_csv(s) == "1;2;4;7,4,3,8,7,3,3,3");
    CHECK(record_text(s) == "{1,2,4,7}");
    CHECK(record_json(Gapset()).find("\"alpha\":null") != std::string::npos);
    CHECK(record_csv(checked_gapset({1})) == "1,1,2,2,1,1,1,");
  }

  TEST_CASE("tampered records are rejected") {
    CHECK_THROWS_AS(parse_record_csv("1;2;4;7,4,3,8,7,3,3,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_csv("1;4,2,2,5,4,3,3,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_csv("1;2,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_json("{\"gaps\":[1]}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record_json("not json"), std::invalid_argument);
  }
}

TEST_SUITE("properties") {
  TEST_CASE("all suites are clean up to genus 10") {
    auto const all = gapsets_up_to(10);
    CHECK(all.size() == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204);
    for (auto const& report : {check_core_properties(all),
                               check_sparse_properties(all),
                               check_phi_properties(all),
                               check_m_set_lemma(12),
                               check_bijection_properties(10)}) {
      CHECK_MESSAGE(report.ok(), report.name());
      CHECK(report.checks_run() > 0);
    }
  }

  TEST_CASE("core suite covers n_0 + ... + n_3 gapsets") {
    auto const report = check_core_properties(gapsets_up_to(3));
    CHECK(report.gapsets_covered() == 8);
  }

  TEST_CASE("violations carry witnesses") {
    SuiteReport r("demo");
    r.record("some-check", true);
    r.record("some-check", false, "{1,2}", "detail");
    CHECK(r.checks_run() == 2);
    REQUIRE(r.violations().size() == 1);
    CHECK(r.violations().front().witness == "{1,2}");
    CHECK_FALSE(r.ok());
  }
}
