#include "ballq/report.hpp"

#include <algorithm>
#include <sstream>

#include "ballq/volume.hpp"
#include "ballq/weights.hpp"
#include "json.hpp"

namespace ballq::report {

namespace {

std::string weights_str(const std::vector<long>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i)
    out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::string compactness(bool cocompact) { return cocompact ? "C" : "NC"; }

/// Pads `s` to `width` with trailing spaces (text table alignment).
std::string pad(const std::string& s, size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

const std::vector<std::string> kHeader = {
    "group", "p",        "chi",   "chi (curated)", "C/NC", "C/NC (curated)",
    "match", "volume",   "arith", "trace field"};

std::vector<std::string> cells(const Row& r) {
  return {r.group_id,
          weights_str(r.weights),
          r.chi.str(),
          r.curated_chi.str(),
          compactness(r.cocompact),
          compactness(r.curated_cocompact),
          r.match ? "yes" : "NO",
          r.volume,
          r.arithmetic ? "A" : "NA",
          r.trace_field};
}

}  // namespace

bool Report::all_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const Row& r) { return r.match; });
}

Report build_report(const std::vector<std::string>& ids) {
  Report rep;
  for (const std::string& id : ids) {
    const refdata::GroupData& data = refdata::group(id);
    for (const refdata::InvariantRow& cur : data.invariants) {
      Row row;
      row.group_id = data.id;
      row.weights = cur.weights;
      row.chi = volume::chi_orb(data, cur.weights);
      row.cocompact = weights::check(data, cur.weights).cocompact;
      row.volume = volume::ball_volume_str(row.chi);
      row.curated_chi = cur.chi;
      row.curated_cocompact = cur.cocompact;
      row.arithmetic = cur.arithmetic;
      row.trace_field = cur.trace_field;
      row.match =
          row.chi == cur.chi && row.cocompact == cur.cocompact;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::string to_text(const Report& r) {
  std::vector<size_t> width(kHeader.size());
  for (size_t i = 0; i < kHeader.size(); ++i) width[i] = kHeader[i].size();
  std::vector<std::vector<std::string>> body;
  for (const Row& row : r.rows) {
    body.push_back(cells(row));
    for (size_t i = 0; i < width.size(); ++i)
      width[i] = std::max(width[i], body.back()[i].size());
  }
  std::string out;
  for (size_t i = 0; i < kHeader.size(); ++i)
    out += pad(kHeader[i], width[i] + (i + 1 < kHeader.size() ? 2 : 0));
  out += '\n';
  for (const auto& row : body) {
    for (size_t i = 0; i < row.size(); ++i)
      out += pad(row[i], width[i] + (i + 1 < row.size() ? 2 : 0));
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& row : r.rows)
    rows.push_back({{"group", row.group_id},
                    {"weights", row.weights},
                    {"chi", row.chi.str()},
                    {"curated_chi", row.curated_chi.str()},
                    {"cocompact", row.cocompact},
                    {"curated_cocompact", row.curated_cocompact},
                    {"match", row.match},
                    {"volume", row.volume},
                    {"arithmetic", row.arithmetic},
                    {"trace_field", row.trace_field}});
  nlohmann::json j;
  j["rows"] = rows;
  j["all_match"] = r.all_match();
  return j.dump(2);
}

std::string to_markdown(const Report& r) {
  std::string out = "|";
  for (const auto& h : kHeader) out += " " + h + " |";
  out += "\n|";
  for (size_t i = 0; i < kHeader.size(); ++i) out += " --- |";
  out += '\n';
  for (const Row& row : r.rows) {
    out += "|";
    for (const auto& c : cells(row)) out += " " + c + " |";
    out += '\n';
  }
  return out;
}

std::string to_latex(const Report& r) {
  std::string out = "\\begin{tabular}{llrrllllll}\n";
  for (size_t i = 0; i < kHeader.size(); ++i)
    out += (i ? " & " : "") + kHeader[i];
  out += " \\\\\n\\hline\n";
  for (const Row& row : r.rows) {
    const auto c = cells(row);
    for (size_t i = 0; i < c.size(); ++i) {
      // Fractions and field names read better in math mode.
      const bool math = i == 2 || i == 3 || i == 9;
      out += (i ? " & " : "") + (math && !c[i].empty() ? "$" + c[i] + "$" : c[i]);
    }
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

}  // namespace ballq::report
