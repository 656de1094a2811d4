#pragma once

#include <string>
#include <vector>

#include "ballq/refdata.hpp"

namespace ballq::report {

using exact::Rational;

/// One admissible assignment: the engine's recomputation of the Euler
/// number and cocompactness next to the curated row, plus the curated
/// metadata the engine does not compute (arithmeticity, trace field).
struct Row {
  std::string group_id;
  std::vector<long> weights;
  Rational chi;
  bool cocompact = false;
  std::string volume;  ///< display string, 8 pi^3 / 3 * |chi|
  Rational curated_chi;
  bool curated_cocompact = false;
  bool arithmetic = false;
  std::string trace_field;
  bool match = false;  ///< chi and cocompact both agree with the curated row
};

/// The recomputed invariants table, row per curated admissible assignment,
/// in curated order (A4 rows first, then B4, ...).
struct Report {
  std::vector<Row> rows;
  bool all_match() const;
};

/// Recomputes every invariant row of the named groups.
Report build_report(const std::vector<std::string>& ids);

/// Renderers.  Text and Markdown are column-aligned tables; LaTeX is a
/// tabular body; JSON round-trips.
std::string to_text(const Report& r);
std::string to_json(const Report& r);
std::string to_markdown(const Report& r);
std::string to_latex(const Report& r);

}  // namespace ballq::report
