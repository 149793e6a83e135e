#include "gapsets/render.hpp"

#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument
#include <vector>     // for vector

#include "json.hpp"

namespace gapsets {

  namespace {

    std::vector<std::string_view> split(std::string_view line, char sep) {
      std::vector<std::string_view> out;
      while (true) {
        auto const pos = line.find(sep);
        out.push_back(line.substr(0, pos));
        if (pos == std::string_view::npos) {
          return out;
        }
        line.remove_prefix(pos + 1);
      }
    }

    int parse_int(std::string_view s) {
      std::size_t used  = 0;
      int const   value = std::stoi(std::string(s), &used);
      if (used != s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
      }
      return value;
    }

    Gapset revalidate(GapCandidate const& gaps, InvariantRecord const& claimed) {
      auto verdict = validate_gapset(gaps);
      if (auto const* w = std::get_if<RejectionWitness>(&verdict)) {
        throw std::invalid_argument("record gaps " + to_string(gaps)
                                    + " are not a gapset: " + to_string(*w));
      }
      auto gapset = std::get<Gapset>(std::move(verdict));
      if (invariants(gapset) != claimed) {
        throw std::invalid_argument("record invariants disagree with gaps "
                                    + to_string(gaps));
      }
      return gapset;
    }

    std::string cell_text(CountGrid const& grid, int g, int kappa) {
      auto const cell = grid.cell(g, kappa);
      return cell ? std::to_string(*cell) : std::string();
    }

  }  // namespace

  std::string record_json(Gapset const& gapset) {
    auto const     inv = invariants(gapset);
    nlohmann::json j;
    j["gaps"]         = std::vector<int>(gapset.elements().begin(),
                                 gapset.elements().end());
    j["genus"]        = inv.genus;
    j["multiplicity"] = inv.multiplicity;
    j["conductor"]    = inv.conductor;
    j["frobenius"]    = inv.frobenius;
    j["depth"]        = inv.depth;
    j["kappa"]        = inv.kappa;
    j["alpha"]        = inv.alpha ? nlohmann::json(*inv.alpha) : nlohmann::json();
    return j.dump();
  }

  std::string record_csv_header() {
    return "gaps,genus,multiplicity,conductor,frobenius,depth,kappa,alpha";
  }

  std::string record_csv(Gapset const& gapset) {
    auto const         inv = invariants(gapset);
    std::ostringstream out;
    auto const         elts = gapset.elements();
    for (std::size_t i = 0; i < elts.size(); ++i) {
      out << (i > 0 ? ";" : "") << elts[i];
    }
    out << ',' << inv.genus << ',' << inv.multiplicity << ',' << inv.conductor
        << ',' << inv.frobenius << ',' << inv.depth << ',' << inv.kappa << ',';
    if (inv.alpha) {
      out << *inv.alpha;
    }
    return out.str();
  }

  std::string record_text(Gapset const& gapset) {
    return to_string(gapset);
  }

  std::string render_record(Gapset const& gapset, RecordFormat format) {
    switch (format) {
      case RecordFormat::json:
        return record_json(gapset);
      case RecordFormat::csv:
        return record_csv(gapset);
      case RecordFormat::text:
        return record_text(gapset);
    }
    return {};
  }

  Gapset parse_record_json(std::string_view line) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument(e.what());
    }
    try {
      InvariantRecord const claimed{
          j.at("genus").get<int>(),
          j.at("multiplicity").get<int>(),
          j.at("conductor").get<int>(),
          j.at("frobenius").get<int>(),
          j.at("depth").get<int>(),
          j.at("kappa").get<int>(),
          j.at("alpha").is_null() ? std::nullopt
                                  : std::optional<int>(j.at("alpha").get<int>())};
      return revalidate(GapCandidate(j.at("gaps").get<std::vector<int>>()),
                        claimed);
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument(e.what());
    }
  }

  Gapset parse_record_csv(std::string_view line) {
    auto const fields = split(line, ',');
    if (fields.size() != 8) {
      throw std::invalid_argument("expected 8 CSV fields, got "
                                  + std::to_string(fields.size()));
    }
    std::vector<int> gaps;
    if (!fields[0].empty()) {
      for (auto token : split(fields[0], ';')) {
        gaps.push_back(parse_int(token));
      }
    }
    InvariantRecord const claimed{
        parse_int(fields[1]),
        parse_int(fields[2]),
        parse_int(fields[3]),
        parse_int(fields[4]),
        parse_int(fields[5]),
        parse_int(fields[6]),
        fields[7].empty() ? std::nullopt : std::optional<int>(parse_int(fields[7]))};
    return revalidate(GapCandidate(std::move(gaps)), claimed);
  }

  std::string render_grid_markdown(CountGrid const& grid) {
    int const          top = grid.max_genus();
    std::ostringstream out;
    out << "| g\\k |";
    for (int kappa = 0; kappa <= top; ++kappa) {
      out << ' ' << kappa << " |";
    }
    out << " n_g |\n|---|";
    for (int kappa = 0; kappa <= top; ++kappa) {
      out << "---|";
    }
    out << "---|\n";
    for (int g = 0; g <= top; ++g) {
      out << "| " << g << " |";
      for (int kappa = 0; kappa <= top; ++kappa) {
        auto text = cell_text(grid, g, kappa);
        if (!text.empty() && CountGrid::is_diagonal(g, kappa)) {
          text += '*';
        }
        out << (text.empty() ? "" : " ") << text << " |";
      }
      out << ' ' << grid.row_sum(g) << " |\n";
    }
    return out.str();
  }

  std::string render_grid_csv(CountGrid const& grid) {
    int const          top = grid.max_genus();
    std::ostringstream out;
    out << 'g';
    for (int kappa = 0; kappa <= top; ++kappa) {
      out << ',' << kappa;
    }
    out << ",n_g\n";
    for (int g = 0; g <= top; ++g) {
      out << g;
      for (int kappa = 0; kappa <= top; ++kappa) {
        out << ',' << cell_text(grid, g, kappa);
      }
      out << ',' << grid.row_sum(g) << '\n';
    }
    return out.str();
  }

  std::string render_genus_counts(CountGrid const& grid) {
    std::ostringstream out;
    out << "g,n_g\n";
    for (int g = 0; g <= grid.max_genus(); ++g) {
      out << g << ',' << grid.row_sum(g) << '\n';
    }
    return out.str();
  }

  std::string render_diagonal(DiagonalSequence const& sequence) {
    std::ostringstream out;
    out << "w,g_w,ratio,cumulative\n";
    for (std::size_t w = 0; w < sequence.terms().size(); ++w) {
      auto const ratio = sequence.ratio(w);
      out << w << ',' << sequence.terms()[w] << ','
          << (ratio ? format_fixed3(*ratio) : std::string("-")) << ','
          << format_fixed3(sequence.cumulative_ratio(w)) << '\n';
    }
    return out.str();
  }

}  // namespace gapsets
