#ifndef GAPSETS_RENDER_HPP_
#define GAPSETS_RENDER_HPP_

// Text serializations used by the command line front end.
//
// Per-gapset records carry: gaps, genus, multiplicity, conductor, frobenius,
// depth, kappa, alpha (null when absent).
//
//   json  {"gaps":[1,2,4,7],"genus":4,...,"alpha":3}        (one per line)
//   csv   gaps,genus,multiplicity,conductor,frobenius,depth,kappa,alpha
//         1;2;4;7,4,3,8,7,3,3,3                            (alpha empty if absent)
//   text  {1,2,4,7}

#include <string>       // for string
#include <string_view>  // for string_view

#include "gapset.hpp"
#include "tally.hpp"

namespace gapsets {

  enum class RecordFormat { json, csv, text };

  std::string record_json(Gapset const& gapset);
  std::string record_csv_header();
  std::string record_csv(Gapset const& gapset);
  std::string record_text(Gapset const& gapset);
  std::string render_record(Gapset const& gapset, RecordFormat format);

  // Parse a record back and re-validate its gaps. Throws
  // std::invalid_argument if malformed, if the gaps are not a gapset, or if
  // the stored invariants disagree with the recomputed ones.
  Gapset parse_record_json(std::string_view line);
  Gapset parse_record_csv(std::string_view line);

  // Table of #G_kappa(g). Empty cells are blank; markdown marks cells with
  // 2g = 3*kappa by a trailing '*'.
  std::string render_grid_markdown(CountGrid const& grid);
  std::string render_grid_csv(CountGrid const& grid);

  // "g,n_g" rows.
  std::string render_genus_counts(CountGrid const& grid);

  // "w,g_w,ratio,cumulative" rows; the w = 0 ratio is "-".
  std::string render_diagonal(DiagonalSequence const& sequence);

}  // namespace gapsets

#endif  // GAPSETS_RENDER_HPP_
