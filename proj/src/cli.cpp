#include "ballq/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ballq/arrangement.hpp"
#include "ballq/group.hpp"
#include "ballq/presentation.hpp"
#include "ballq/refdata.hpp"
#include "ballq/report.hpp"
#include "ballq/volume.hpp"
#include "ballq/weights.hpp"
#include "json.hpp"

namespace ballq::cli {

namespace {

using exact::Rational;

constexpr int kOk = 0;
constexpr int kFailed = 1;  ///< validation mismatch / failed conditions
constexpr int kUsage = 2;

/// Thrown for malformed command input discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("weight vector '" + text +
                       "' is not a comma-separated integer list");
    }
  }
  if (out.empty()) throw UsageError("empty weight vector");
  return out;
}

const refdata::GroupData& find_group(const std::string& id) {
  try {
    return refdata::group(id);
  } catch (const refdata::DataError&) {
    std::string known;
    for (const auto& g : refdata::group_ids()) known += " " + g;
    throw UsageError("unknown group '" + id + "'; known groups:" + known);
  }
}

std::string weights_str(const std::vector<long>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i)
    out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::string assignment_list(const std::vector<std::vector<long>>& list) {
  if (list.empty()) return "none";
  std::string out;
  for (size_t i = 0; i < list.size(); ++i) {
    out += i ? ", " : "";
    if (list[i].size() == 1)
      out += std::to_string(list[i][0]);
    else
      out += "(" + weights_str(list[i]) + ")";
  }
  return out;
}

std::string incidence_str(const std::map<std::string, long>& incident) {
  std::string out;
  for (const auto& [label, count] : incident)
    out += (out.empty() ? "" : ", ") + std::to_string(count) + "x " + label;
  return out.empty() ? "-" : out;
}

std::string mirrors_str(const std::vector<long>& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i)
    out += (i ? "," : "") + std::to_string(m[i]);
  return out;
}

/// Column-aligned plain-text table.
std::string table_str(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

nlohmann::json stratum_json(const refdata::Stratum& s) {
  nlohmann::json j;
  j["label"] = s.label;
  j["size"] = s.size;
  j["mirrors"] = s.mirrors;
  j["irreducible"] = s.irreducible;
  if (s.center) j["center"] = *s.center;
  if (s.kappa) j["kappa"] = s.kappa->str();
  j["incident"] = s.incident;
  return j;
}

// ---------------------------------------------------------------------------
// list-groups
// ---------------------------------------------------------------------------

int run_list_groups(const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& id : refdata::group_ids()) {
      const auto& d = refdata::group(id);
      nlohmann::json orbits = nlohmann::json::array();
      for (const auto& o : d.mirror_orbits)
        orbits.push_back({{"label", o.label},
                          {"size", o.size},
                          {"weight", d.weight_names[static_cast<size_t>(o.weight_index) - 1]}});
      groups.push_back({{"id", d.id},
                        {"structure", d.display},
                        {"order", d.order},
                        {"center", d.center_order},
                        {"projective_order", d.projective_order},
                        {"mirrors", d.mirror_count},
                        {"mirror_orbits", orbits},
                        {"weights", d.weight_names}});
    }
    out << nlohmann::json{{"groups", groups},
                          {"data_origin", refdata::data_origin()}}
               .dump(2)
        << '\n';
    return kOk;
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "structure", "order", "center", "mirrors", "weights"});
  for (const auto& id : refdata::group_ids()) {
    const auto& d = refdata::group(id);
    std::string mirrors, weights;
    for (size_t i = 0; i < d.mirror_orbits.size(); ++i) {
      mirrors += (i ? " + " : "") + std::to_string(d.mirror_orbits[i].size);
      weights += (i ? "," : "") +
                 d.weight_names[static_cast<size_t>(d.mirror_orbits[i].weight_index) - 1];
    }
    rows.push_back({d.id, d.display, std::to_string(d.order),
                    std::to_string(d.center_order), mirrors, weights});
  }
  out << table_str(rows)
      << "weights apply per mirror orbit, in the order listed above.\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

int run_build(const refdata::GroupData& data, const std::string& format,
              std::ostream& out) {
  const group::BuiltGroup g = group::build_group(data);
  const auto problems = group::validate_group(g);

  if (format == "json") {
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : g.mirror_orbits())
      orbits.push_back({{"label", o.label},
                        {"size", o.mirrors.size()},
                        {"weight_index", o.weight_index}});
    out << nlohmann::json{{"id", data.id},
                          {"order", g.order()},
                          {"center", g.center_order()},
                          {"reflections", g.reflections().size()},
                          {"mirrors", g.mirrors().size()},
                          {"mirror_orbits", orbits},
                          {"problems", problems}}
               .dump(2)
        << '\n';
  } else {
    out << data.id << " (" << data.display << "): order " << g.order()
        << ", center " << g.center_order() << ", " << g.reflections().size()
        << " reflections on " << g.mirrors().size() << " mirrors\n";
    for (const auto& o : g.mirror_orbits())
      out << "mirror orbit " << o.label << ": " << o.mirrors.size()
          << " mirrors, weight "
          << data.weight_names[static_cast<size_t>(o.weight_index) - 1] << '\n';
    if (problems.empty()) {
      out << "validation: ok\n";
    } else {
      for (const auto& p : problems) out << "PROBLEM: " << p << '\n';
    }
  }
  return problems.empty() ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// combinatorics
// ---------------------------------------------------------------------------

void stratum_rows(const std::vector<refdata::Stratum>& strata,
                  std::vector<std::vector<std::string>>& rows) {
  rows.push_back({"label", "size", "mirrors", "|Z|", "kappa", "incidence", ""});
  for (const auto& s : strata)
    rows.push_back({s.label, std::to_string(s.size), mirrors_str(s.mirrors),
                    s.center ? std::to_string(*s.center) : "-",
                    s.kappa ? s.kappa->str() : "-", incidence_str(s.incident),
                    s.irreducible ? "" : "(reducible)"});
}

int run_combinatorics(const refdata::GroupData& data, const std::string& format,
                      std::ostream& out) {
  const group::BuiltGroup g = group::build_group(data);
  const arrangement::MirrorArrangement arr = arrangement::build_arrangement(g);
  const refdata::CombinatoricsTables tables = arr.tables();
  const auto diffs = refdata::diff(tables, data.combinatorics());

  if (format == "json") {
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& s : tables.lines) lines.push_back(stratum_json(s));
    nlohmann::json points = nlohmann::json::array();
    for (const auto& s : tables.points) points.push_back(stratum_json(s));
    std::vector<std::string> diff_strings;
    for (const auto& d : diffs) diff_strings.push_back(d.str());
    out << nlohmann::json{{"id", tables.id},
                          {"order", tables.order},
                          {"lines", lines},
                          {"points", points},
                          {"diff", diff_strings}}
               .dump(2)
        << '\n';
  } else {
    long nlines = 0, npoints = 0;
    for (const auto& s : tables.lines) nlines += s.size;
    for (const auto& s : tables.points) npoints += s.size;
    out << data.id << ": " << nlines << " lines in " << tables.lines.size()
        << " orbits, " << npoints << " points in " << tables.points.size()
        << " orbits\n\nlines\n";
    std::vector<std::vector<std::string>> rows;
    stratum_rows(tables.lines, rows);
    out << table_str(rows) << "\npoints\n";
    rows.clear();
    stratum_rows(tables.points, rows);
    out << table_str(rows) << '\n';
    if (diffs.empty()) {
      out << "agreement with curated tables: clean\n";
    } else {
      for (const auto& d : diffs) out << "MISMATCH: " << d.str() << '\n';
    }
  }
  return diffs.empty() ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// admissible
// ---------------------------------------------------------------------------

int run_admissible(const refdata::GroupData& data, long bound, bool explain,
                   const std::string& format, std::ostream& out) {
  const weights::Classified c = weights::classify_range(data, bound);
  if (format == "json") {
    out << nlohmann::json{{"group", data.id},
                          {"bound", bound},
                          {"admissible", c.admissible},
                          {"parabolic", c.parabolic},
                          {"finite", c.finite}}
               .dump(2)
        << '\n';
    return kOk;
  }
  if (explain) {
    std::vector<std::vector<long>> sporadic = c.finite;
    out << "finite: ";
    if (data.classification.finite_family) {
      // The family with the second weight pinned at 2 is infinite; render
      // the pattern rather than the swept slice.
      std::erase_if(sporadic,
                    [](const std::vector<long>& w) { return w.back() == 2; });
      if (!sporadic.empty()) out << assignment_list(sporadic) << " and ";
      out << "the family (p1,2) — "
          << data.classification.finite_family->description;
    } else {
      out << assignment_list(sporadic);
    }
    out << '\n' << "parabolic: " << assignment_list(c.parabolic) << '\n'
        << "admissible: ";
  }
  out << assignment_list(c.admissible) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

std::string stratum_check_line(const weights::StratumCheck& s) {
  std::string line = s.label + " (codim " + std::to_string(s.codim) +
                     "): kappa = " + s.kappa.str();
  switch (s.condition) {
    case weights::StratumCondition::kNotRequired:
      break;
    case weights::StratumCondition::kCusp:
      line += ", cusp";
      break;
    case weights::StratumCondition::kIntegral:
      line += ", n = " + std::to_string(*s.n);
      break;
    case weights::StratumCondition::kFails:
      line += ", |Z|/(kappa-1) = " + s.ratio->str() + " -> FAILS";
      break;
  }
  return line;
}

int run_check(const refdata::GroupData& data, const std::vector<long>& w,
              bool explain, const std::string& format, std::ostream& out) {
  const weights::WeightCheck c = weights::check(data, w);
  const bool failed =
      c.holonomy == weights::Holonomy::kHyperbolic && !c.admissible;

  if (format == "json") {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& s : c.strata) {
      nlohmann::json js{{"label", s.label},
                        {"codim", s.codim},
                        {"kappa", s.kappa.str()},
                        {"condition", weights::condition_name(s.condition)}};
      if (s.ratio) js["ratio"] = s.ratio->str();
      if (s.n) js["n"] = *s.n;
      strata.push_back(js);
    }
    out << nlohmann::json{{"group", data.id},
                          {"weights", w},
                          {"kappa_origin", c.kappa_origin.str()},
                          {"holonomy", weights::holonomy_name(c.holonomy)},
                          {"admissible", c.admissible},
                          {"cocompact", c.cocompact},
                          {"strata", strata},
                          {"failures", c.failures},
                          {"cusps", c.cusps}}
               .dump(2)
        << '\n';
    return failed ? kFailed : kOk;
  }

  out << data.id << " at (" << weights_str(w)
      << "): " << weights::holonomy_name(c.holonomy);
  if (c.holonomy == weights::Holonomy::kHyperbolic) {
    if (!c.admissible)
      out << ", FAILS the stratum conditions";
    else
      out << ", admissible, " << (c.cocompact ? "cocompact" : "with cusps");
  }
  out << "\nkappa at the origin = " << c.kappa_origin.str() << '\n';
  for (const auto& s : c.strata) {
    const bool interesting =
        s.condition != weights::StratumCondition::kNotRequired;
    if (explain || (interesting &&
                    c.holonomy == weights::Holonomy::kHyperbolic))
      out << stratum_check_line(s) << '\n';
  }
  return failed ? kFailed : kOk;
}

// ---------------------------------------------------------------------------
// chi
// ---------------------------------------------------------------------------

int run_chi(const refdata::GroupData& data, const std::vector<long>& w,
            bool show_volume, const std::string& format, std::ostream& out,
            std::ostream& err) {
  Rational chi;
  volume::BlowupModel model;
  try {
    chi = volume::chi_orb(data, w);
    model = volume::build_blowup_model(data, w);
  } catch (const volume::VolumeError& e) {
    err << e.what() << '\n';
    return kFailed;
  }
  const Rational cube = volume::cube(model);
  const std::string vol = volume::ball_volume_str(chi);

  if (format == "json") {
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& p : model.points)
      alpha.push_back({{"stratum", p.label},
                       {"orbit_size", p.orbit_size},
                       {"value", p.alpha.str()}});
    nlohmann::json beta = nlohmann::json::array();
    for (const auto& l : model.lines)
      beta.push_back({{"stratum", l.label},
                      {"orbit_size", l.orbit_size},
                      {"value", l.beta.str()}});
    out << nlohmann::json{{"group", data.id},
                          {"weights", w},
                          {"lambda", model.lambda.str()},
                          {"alpha", alpha},
                          {"beta", beta},
                          {"cube", cube.str()},
                          {"projective_order", data.projective_order},
                          {"chi", chi.str()},
                          {"volume", vol}}
               .dump(2)
        << '\n';
    return kOk;
  }

  out << "χ = " << chi.str() << '\n';
  if (show_volume)
    out << "volume = " << vol << " (display only: 8π³/3 · |χ|)\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// presentation
// ---------------------------------------------------------------------------

int run_presentation(const refdata::GroupData& data, const std::vector<long>& w,
                     const std::string& format, std::ostream& out,
                     std::ostream& err) {
  presentation::Presentation p;
  try {
    p = presentation::build_presentation(data, w);
  } catch (const presentation::PresentationError& e) {
    err << e.what() << '\n';
    return kFailed;
  }
  if (format == "json")
    out << presentation::to_json(p) << '\n';
  else if (format == "latex")
    out << presentation::to_latex(p) << '\n';
  else if (format == "md")
    out << "```\n" << presentation::to_text(p) << "```\n";
  else
    out << presentation::to_text(p);
  return kOk;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

int run_report(const std::vector<std::string>& ids, const std::string& format,
               std::ostream& out) {
  const report::Report rep = report::build_report(ids);
  if (format == "json")
    out << report::to_json(rep) << '\n';
  else if (format == "md")
    out << report::to_markdown(rep);
  else if (format == "latex")
    out << report::to_latex(rep);
  else
    out << report::to_text(rep);
  return rep.all_match() ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int validate_one(const refdata::GroupData& data, std::ostream& out) {
  std::vector<std::string> problems;
  auto stage = [&](const std::string& name, const std::vector<std::string>& found) {
    if (found.empty()) {
      out << "  " << name << ": ok\n";
    } else {
      for (const auto& p : found) out << "  " << name << ": PROBLEM: " << p << '\n';
      problems.insert(problems.end(), found.begin(), found.end());
    }
  };

  out << data.id << '\n';
  stage("curated data audit", refdata::audit(data));

  const group::BuiltGroup g = group::build_group(data);
  stage("group reconstruction", group::validate_group(g));

  const arrangement::MirrorArrangement arr = arrangement::build_arrangement(g);
  std::vector<std::string> arr_problems = arrangement::validate_arrangement(g, arr);
  for (const auto& d : refdata::diff(arr.tables(), data.combinatorics()))
    arr_problems.push_back("diff: " + d.str());
  stage("arrangement", arr_problems);

  std::vector<std::string> sweep;
  const weights::Classified got = weights::classify_range(data, 2000);
  if (got.admissible != data.classification.admissible)
    sweep.push_back("admissible list disagrees with the curated classification");
  if (got.parabolic != data.classification.parabolic)
    sweep.push_back("parabolic list disagrees with the curated classification");
  std::vector<std::vector<long>> expected_finite = data.classification.finite;
  if (data.classification.finite_family)
    for (long p = 2; p <= 2000; ++p) expected_finite.push_back({p, 2});
  std::sort(expected_finite.begin(), expected_finite.end());
  std::vector<std::vector<long>> got_finite = got.finite;
  std::sort(got_finite.begin(), got_finite.end());
  if (got_finite != expected_finite)
    sweep.push_back("finite list disagrees with the curated classification");
  stage("classification sweep to 2000", sweep);

  std::vector<std::string> chi_problems;
  std::map<std::vector<long>, Rational> computed;
  for (const auto& row : data.invariants) {
    try {
      computed.emplace(row.weights, volume::chi_orb(data, row.weights));
      const bool cocompact = weights::check(data, row.weights).cocompact;
      if (cocompact != row.cocompact)
        chi_problems.push_back("cocompactness flag differs at (" +
                               weights_str(row.weights) + ")");
    } catch (const volume::VolumeError& e) {
      chi_problems.push_back(e.what());
    }
  }
  for (const auto& d : refdata::diff(computed, data))
    chi_problems.push_back("chi: " + d.str());
  stage("euler numbers", chi_problems);

  std::vector<std::string> pres_problems =
      presentation::verify_exponent_formulas(data);
  for (const auto& row : data.invariants) {
    try {
      presentation::build_presentation(data, row.weights);
    } catch (const presentation::PresentationError& e) {
      pres_problems.push_back(e.what());
    }
  }
  stage("presentations", pres_problems);

  return problems.empty() ? kOk : kFailed;
}

int run_validate(const std::vector<std::string>& ids, bool show_errata,
                 std::ostream& out) {
  int status = kOk;
  for (const auto& id : ids)
    if (validate_one(refdata::group(id), out) != kOk) status = kFailed;
  if (show_errata) {
    const auto& entries = refdata::errata();
    out << "\nrecorded upstream misprints (" << entries.size() << "):\n";
    for (const auto& e : entries)
      out << "  " << e.id << " [" << e.group << "] " << e.context << ": printed '"
          << e.printed << "', corrected '" << e.corrected << "' — " << e.reason
          << '\n';
  }
  out << (status == kOk ? "validation: ok\n" : "validation: FAILED\n");
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact reconstruction of the three-dimensional ball quotients "
               "attached to the rank-four mirror arrangements"};
  app.require_subcommand(1);

  std::string group_id, pstr, format = "text";
  long bound = 2000;
  bool explain = false, show_volume = false, all_groups = false,
       show_errata = false;
  std::vector<std::string> group_list;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "md", "latex"}));
  };
  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("group", group_id, "group id (A4, B4, G28, G29, G30, G31)")
        ->required();
  };
  auto add_weights = [&](CLI::App* cmd) {
    cmd->add_option("-p,--weights", pstr,
                    "weight assignment, comma-separated in mirror orbit order")
        ->required();
  };

  CLI::App* c_list = app.add_subcommand("list-groups", "list the six groups");
  add_format(c_list);

  CLI::App* c_build = app.add_subcommand(
      "build", "enumerate one group and validate the reconstruction");
  add_group(c_build);
  add_format(c_build);

  CLI::App* c_comb = app.add_subcommand(
      "combinatorics", "compute the stratum orbit tables of one group");
  add_group(c_comb);
  add_format(c_comb);

  CLI::App* c_adm = app.add_subcommand(
      "admissible", "enumerate admissible weight assignments");
  add_group(c_adm);
  add_format(c_adm);
  c_adm->add_option("--bound", bound, "largest weight to try");
  c_adm->add_flag("--explain", explain, "also list finite and parabolic rows");

  CLI::App* c_check = app.add_subcommand(
      "check", "evaluate the stratum conditions at one assignment");
  add_group(c_check);
  add_weights(c_check);
  add_format(c_check);
  c_check->add_flag("--explain", explain, "show every stratum row");

  CLI::App* c_chi = app.add_subcommand(
      "chi", "orbifold Euler number of one admissible assignment");
  add_group(c_chi);
  add_weights(c_chi);
  add_format(c_chi);
  c_chi->add_flag("--volume", show_volume, "also print the ball volume");

  CLI::App* c_pres = app.add_subcommand(
      "presentation", "lattice presentation at one admissible assignment");
  add_group(c_pres);
  add_weights(c_pres);
  add_format(c_pres);

  CLI::App* c_report = app.add_subcommand(
      "report", "recomputed invariants next to the curated tables");
  c_report->add_option("group", group_list, "group ids");
  c_report->add_flag("--all", all_groups, "all six groups");
  add_format(c_report);

  CLI::App* c_val = app.add_subcommand(
      "validate", "full recomputation and diff against the curated tables");
  c_val->add_option("group", group_list, "group ids");
  c_val->add_flag("--all", all_groups, "all six groups");
  c_val->add_flag("--errata", show_errata, "list recorded upstream misprints");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(c_list)) return run_list_groups(format, out);
    if (app.got_subcommand(c_build))
      return run_build(find_group(group_id), format, out);
    if (app.got_subcommand(c_comb))
      return run_combinatorics(find_group(group_id), format, out);
    if (app.got_subcommand(c_adm))
      return run_admissible(find_group(group_id), bound, explain, format, out);
    if (app.got_subcommand(c_check))
      return run_check(find_group(group_id), parse_weights(pstr), explain,
                       format, out);
    if (app.got_subcommand(c_chi))
      return run_chi(find_group(group_id), parse_weights(pstr), show_volume,
                     format, out, err);
    if (app.got_subcommand(c_pres))
      return run_presentation(find_group(group_id), parse_weights(pstr), format,
                              out, err);
    if (app.got_subcommand(c_report) || app.got_subcommand(c_val)) {
      std::vector<std::string> ids;
      if (all_groups || group_list.empty()) {
        ids = refdata::group_ids();
      } else {
        for (const auto& id : group_list) ids.push_back(find_group(id).id);
      }
      if (app.got_subcommand(c_report)) return run_report(ids, format, out);
      return run_validate(ids, show_errata, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const weights::WeightError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace ballq::cli
