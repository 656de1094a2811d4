#include "ballq/refdata.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ballq::refdata {

namespace detail {
// Defined in the generated embedded_data.cpp.
const std::map<std::string, std::string>& embedded_data_files();
}  // namespace detail

using nlohmann::json;
using symbolic::MultiPoly;
using symbolic::RatFunc;

std::string word_str(const Word& word) {
  std::string out;
  for (int g : word) {
    if (!out.empty()) out += ' ';
    out += 'r';
    out += std::to_string(g < 0 ? -g : g);
    if (g < 0) out += "^-1";
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DataError(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) fail(ctx, std::string("missing key '") + key + "'");
  return *it;
}

long need_long(const json& j, const char* key, const std::string& ctx) {
  const json& v = need(j, key, ctx);
  if (!v.is_number_integer()) fail(ctx, std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

std::string need_str(const json& j, const char* key, const std::string& ctx) {
  const json& v = need(j, key, ctx);
  if (!v.is_string()) fail(ctx, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

bool need_bool(const json& j, const char* key, const std::string& ctx) {
  const json& v = need(j, key, ctx);
  if (!v.is_boolean()) fail(ctx, std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

const json& need_array(const json& j, const char* key, const std::string& ctx) {
  const json& v = need(j, key, ctx);
  if (!v.is_array()) fail(ctx, std::string("'") + key + "' must be an array");
  return v;
}

const json& need_object(const json& j, const char* key, const std::string& ctx) {
  const json& v = need(j, key, ctx);
  if (!v.is_object()) fail(ctx, std::string("'") + key + "' must be an object");
  return v;
}

Rational parse_rational(const json& v, const std::string& ctx) {
  if (!v.is_string()) fail(ctx, "exact values are stored as strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(ctx, std::string("bad rational: ") + e.what());
  }
}

RatFunc parse_ratfunc(const std::string& text, const std::string& ctx) {
  try {
    return symbolic::parse_formula(text);
  } catch (const std::exception& e) {
    fail(ctx, "bad formula '" + text + "': " + e.what());
  }
}

std::vector<long> parse_long_vec(const json& v, const std::string& ctx) {
  if (!v.is_array()) fail(ctx, "expected an integer array");
  std::vector<long> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) fail(ctx, "expected an integer array");
    out.push_back(e.get<long>());
  }
  return out;
}

Word parse_word(const json& v, size_t num_generators, const std::string& ctx) {
  if (!v.is_array() || v.empty()) fail(ctx, "a word is a nonempty integer array");
  Word w;
  for (const json& e : v) {
    if (!e.is_number_integer()) fail(ctx, "word letters must be integers");
    int g = e.get<int>();
    int a = g < 0 ? -g : g;
    if (a < 1 || a > static_cast<int>(num_generators))
      fail(ctx, "word letter " + std::to_string(g) + " out of range");
    w.push_back(g);
  }
  return w;
}

std::string weights_key(const std::vector<long>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Stratum parse_stratum(const json& j, size_t num_weights, size_t num_generators,
                      const std::string& ctx) {
  Stratum s;
  s.label = need_str(j, "label", ctx);
  const std::string where = ctx + "." + s.label;
  s.size = need_long(j, "size", where);
  if (s.size <= 0) fail(where, "orbit size must be positive");
  s.mirrors = parse_long_vec(need_array(j, "mirrors", where), where + ".mirrors");
  if (s.mirrors.size() != num_weights)
    fail(where, "mirror counts must list one entry per weight class");
  s.irreducible = j.value("irreducible", false);
  if (j.contains("center")) s.center = need_long(j, "center", where);
  if (j.contains("kappa"))
    s.kappa = parse_ratfunc(need_str(j, "kappa", where), where + ".kappa");
  if (s.irreducible != s.center.has_value() || s.irreducible != s.kappa.has_value())
    fail(where, "center and kappa must be present exactly for irreducible strata");
  for (const json& w : need_array(j, "defining", where))
    s.defining.push_back(parse_word(w, num_generators, where + ".defining"));
  if (s.defining.empty()) fail(where, "defining words required");
  const char* inc_key = j.contains("points") ? "points" : "lines";
  for (auto it : need_object(j, inc_key, where).items()) {
    if (!it.value().is_number_integer() || it.value().get<long>() <= 0)
      fail(where, "incidence multiplicities must be positive integers");
    s.incident[it.key()] = it.value().get<long>();
  }
  s.ref = need_str(j, "ref", where);
  return s;
}

GroupData parse_group(const std::string& name, const json& j) {
  const std::string ctx = name;
  GroupData g;
  g.id = need_str(j, "id", ctx);
  g.display = need_str(j, "display", ctx);
  g.order = need_long(j, "order", ctx);
  g.center_order = need_long(j, "center_order", ctx);
  g.projective_order = need_long(j, "projective_order", ctx);
  g.mirror_count = need_long(j, "mirror_count", ctx);
  g.rank = static_cast<int>(need_long(j, "rank", ctx));
  long conductor = need_long(j, "conductor", ctx);
  if (conductor < 1) fail(ctx, "conductor must be positive");
  g.conductor = static_cast<unsigned>(conductor);
  if (g.rank < 2) fail(ctx, "rank must be at least 2");

  for (const json& w : need_array(j, "weight_names", ctx))
    g.weight_names.push_back(w.get<std::string>());
  if (g.weight_names.empty() || g.weight_names.size() > 2)
    fail(ctx, "one or two weight classes supported");

  const json& gens = need_object(j, "generators", ctx);
  for (const json& n : need_array(gens, "names", ctx + ".generators"))
    g.generator_names.push_back(n.get<std::string>());
  size_t ngen = g.generator_names.size();
  if (ngen == 0) fail(ctx, "at least one generator required");
  const json& roots = need_array(gens, "roots", ctx + ".generators");
  if (roots.size() != ngen) fail(ctx, "one root per generator required");
  const unsigned phi = Cyclotomic::phi(g.conductor);
  for (size_t i = 0; i < roots.size(); ++i) {
    const std::string where = ctx + ".roots[" + std::to_string(i) + "]";
    if (!roots[i].is_array() || roots[i].size() != static_cast<size_t>(g.rank))
      fail(where, "a root has one coordinate per dimension");
    std::vector<Cyclotomic> root;
    bool nonzero = false;
    for (const json& coord : roots[i]) {
      if (!coord.is_array() || coord.size() != phi)
        fail(where, "each coordinate lists phi(conductor) basis coefficients");
      std::vector<Rational> coeffs;
      for (const json& c : coord) coeffs.push_back(parse_rational(c, where));
      Cyclotomic value = Cyclotomic::from_coefficients(g.conductor, std::move(coeffs));
      nonzero = nonzero || !value.is_zero();
      root.push_back(std::move(value));
    }
    if (!nonzero) fail(where, "root vectors must be nonzero");
    g.roots.push_back(std::move(root));
  }

  auto check_gen = [&](long v, const std::string& where) {
    if (v < 1 || v > static_cast<long>(ngen))
      fail(where, "generator index " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  };

  const json& diagram = need_object(j, "diagram", ctx);
  for (const json& b : need_array(diagram, "braids", ctx + ".diagram")) {
    auto v = parse_long_vec(b, ctx + ".diagram.braids");
    if (v.size() != 3) fail(ctx, "a braid entry is [a, b, length]");
    BraidRelation r;
    r.a = check_gen(v[0], ctx + ".diagram.braids");
    r.b = check_gen(v[1], ctx + ".diagram.braids");
    r.length = static_cast<int>(v[2]);
    if (r.a == r.b || r.length < 3) fail(ctx, "braid entries need distinct generators and length >= 3");
    g.braids.push_back(r);
  }
  for (const json& c : need_array(diagram, "commuting", ctx + ".diagram")) {
    auto v = parse_long_vec(c, ctx + ".diagram.commuting");
    if (v.size() != 2) fail(ctx, "a commuting entry is [a, b]");
    g.commuting.emplace_back(check_gen(v[0], ctx), check_gen(v[1], ctx));
  }
  for (const json& c : need_array(diagram, "cycles", ctx + ".diagram")) {
    auto v = parse_long_vec(c, ctx + ".diagram.cycles");
    if (v.size() < 3) fail(ctx, "a cycle lists at least three generators");
    std::vector<int> cyc;
    for (long e : v) cyc.push_back(check_gen(e, ctx + ".diagram.cycles"));
    g.cycles.push_back(std::move(cyc));
  }
  for (const json& w : need_array(diagram, "word_braids", ctx + ".diagram")) {
    WordBraid wb;
    wb.a = parse_word(need_array(w, "a", ctx), ngen, ctx + ".diagram.word_braids");
    wb.b = parse_word(need_array(w, "b", ctx), ngen, ctx + ".diagram.word_braids");
    wb.length = static_cast<int>(need_long(w, "k", ctx + ".diagram.word_braids"));
    if (wb.length < 2) fail(ctx, "word braid length must be at least 2");
    g.word_braids.push_back(std::move(wb));
  }

  for (const json& w : need_array(j, "word_orders", ctx)) {
    Word word = parse_word(need_array(w, "word", ctx), ngen, ctx + ".word_orders");
    long order = need_long(w, "order", ctx + ".word_orders");
    if (order < 1) fail(ctx, "word orders must be positive");
    g.word_orders.emplace_back(std::move(word), order);
  }

  std::set<std::string> labels;
  for (const json& o : need_array(j, "mirror_orbits", ctx)) {
    MirrorOrbit orbit;
    orbit.label = need_str(o, "label", ctx + ".mirror_orbits");
    orbit.size = need_long(o, "size", ctx + ".mirror_orbits");
    orbit.anchor = check_gen(need_long(o, "anchor", ctx), ctx + ".mirror_orbits");
    orbit.weight_index = static_cast<int>(need_long(o, "weight_index", ctx));
    if (orbit.weight_index < 1 ||
        orbit.weight_index > static_cast<int>(g.num_weights()))
      fail(ctx, "mirror orbit weight_index out of range");
    if (!labels.insert(orbit.label).second)
      fail(ctx, "duplicate label " + orbit.label);
    g.mirror_orbits.push_back(std::move(orbit));
  }
  if (g.mirror_orbits.size() != g.num_weights())
    fail(ctx, "expected one mirror orbit per weight class");

  for (const json& s : need_array(j, "lines", ctx)) {
    Stratum st = parse_stratum(s, g.num_weights(), ngen, ctx + ".lines");
    if (!labels.insert(st.label).second) fail(ctx, "duplicate label " + st.label);
    g.lines.push_back(std::move(st));
  }
  for (const json& s : need_array(j, "points", ctx)) {
    Stratum st = parse_stratum(s, g.num_weights(), ngen, ctx + ".points");
    if (!labels.insert(st.label).second) fail(ctx, "duplicate label " + st.label);
    g.points.push_back(std::move(st));
  }
  for (const Stratum& line : g.lines)
    for (const auto& [label, count] : line.incident)
      if (!g.find_point(label))
        fail(ctx + ".lines." + line.label, "unknown incident point " + label);
  for (const Stratum& point : g.points)
    for (const auto& [label, count] : point.incident)
      if (!g.find_line(label))
        fail(ctx + ".points." + point.label, "unknown incident line " + label);

  for (const json& col : need_array(j, "kappa_grid", ctx)) {
    KappaGridColumn c;
    c.weights = parse_long_vec(need_array(col, "weights", ctx), ctx + ".kappa_grid");
    if (c.weights.size() != g.num_weights())
      fail(ctx, "kappa grid column weight count mismatch");
    for (auto it : need_object(col, "values", ctx + ".kappa_grid").items())
      c.values[it.key()] = parse_rational(it.value(), ctx + ".kappa_grid." + it.key());
    g.kappa_grid.push_back(std::move(c));
  }

  const json& cls = need_object(j, "classification", ctx);
  auto parse_assignments = [&](const char* key) {
    std::vector<std::vector<long>> out;
    for (const json& a : need_array(cls, key, ctx + ".classification")) {
      auto v = parse_long_vec(a, ctx + ".classification");
      if (v.size() != g.num_weights())
        fail(ctx, std::string("classification.") + key + ": weight count mismatch");
      for (long p : v)
        if (p < 2) fail(ctx, std::string("classification.") + key + ": weights are >= 2");
      out.push_back(std::move(v));
    }
    return out;
  };
  g.classification.finite = parse_assignments("finite");
  g.classification.parabolic = parse_assignments("parabolic");
  g.classification.admissible = parse_assignments("admissible");
  for (auto it : need_object(cls, "finite_notes", ctx).items())
    g.classification.finite_notes[it.key()] = it.value().get<std::string>();
  if (cls.contains("finite_family") && !cls["finite_family"].is_null()) {
    FiniteFamily fam;
    fam.pattern = need_str(cls["finite_family"], "pattern", ctx + ".finite_family");
    fam.description = need_str(cls["finite_family"], "description", ctx + ".finite_family");
    g.classification.finite_family = std::move(fam);
  }
  g.classification.swap_symmetry = cls.value("swap_symmetry", false);
  if (cls.contains("schwarz_failure_example")) {
    const json& ex = cls["schwarz_failure_example"];
    SchwarzFailure f;
    f.weights = parse_long_vec(need_array(ex, "weights", ctx), ctx + ".schwarz_failure");
    f.stratum = need_str(ex, "stratum", ctx + ".schwarz_failure");
    f.ratio = parse_rational(need(ex, "ratio", ctx + ".schwarz_failure"), ctx);
    f.note = need_str(ex, "note", ctx + ".schwarz_failure");
    if (!g.find_stratum(f.stratum)) fail(ctx, "schwarz failure names unknown stratum");
    g.classification.schwarz_failure_example = std::move(f);
  }

  const json& pres = need_object(j, "presentation", ctx);
  for (const json& r : need_array(pres, "order_relations", ctx + ".presentation")) {
    OrderRelation rel;
    rel.generator = check_gen(need_long(r, "generator", ctx), ctx + ".presentation");
    rel.weight_index = static_cast<int>(need_long(r, "weight_index", ctx));
    if (rel.weight_index < 1 || rel.weight_index > static_cast<int>(g.num_weights()))
      fail(ctx, "order relation weight_index out of range");
    g.presentation.order_relations.push_back(rel);
  }
  for (const json& cpow : need_array(pres, "central_powers", ctx + ".presentation")) {
    CentralPower cp;
    cp.word = parse_word(need_array(cpow, "word", ctx), ngen, ctx + ".central_powers");
    cp.stratum = need_str(cpow, "stratum", ctx + ".central_powers");
    if (!g.find_point(cp.stratum))
      fail(ctx, "central power names unknown point stratum " + cp.stratum);
    cp.base = parse_ratfunc(need_str(cpow, "base", ctx), ctx + ".central_powers.base");
    const json& expo = need(cpow, "exponent", ctx + ".central_powers");
    if (!expo.is_null())
      cp.exponent = parse_ratfunc(expo.get<std::string>(), ctx + ".central_powers.exponent");
    g.presentation.central_powers.push_back(std::move(cp));
  }

  for (const json& row : need_array(j, "invariants", ctx)) {
    InvariantRow r;
    r.weights = parse_long_vec(need_array(row, "weights", ctx), ctx + ".invariants");
    const std::string where = ctx + ".invariants." + weights_key(r.weights);
    if (r.weights.size() != g.num_weights()) fail(where, "weight count mismatch");
    r.chi = parse_rational(need(row, "chi", where), where + ".chi");
    r.cocompact = need_bool(row, "cocompact", where);
    r.arithmetic = need_bool(row, "arithmetic", where);
    r.trace_field = need_str(row, "trace_field", where);
    const json& dm = need(row, "dm", where);
    if (!dm.is_null()) {
      DMData d;
      d.mu = parse_long_vec(need_array(dm, "mu", where), where + ".dm.mu");
      if (d.mu.size() != 6) fail(where, "dm.mu lists six exponents");
      d.den = need_long(dm, "den", where);
      d.index = need_long(dm, "index", where);
      if (d.den < 1 || d.index < 1) fail(where, "dm.den and dm.index are positive");
      r.dm = std::move(d);
    }
    r.ref = need_str(row, "ref", where);
    g.invariants.push_back(std::move(r));
  }

  return g;
}

struct Store {
  std::string origin;
  std::map<std::string, GroupData> groups;  // keyed by lowercase id
  std::vector<ErratumEntry> errata;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

json parse_text(const std::string& name, const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(name, "malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open data file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Store load_store() {
  Store s;
  const char* dir = std::getenv("BALLQ_DATA_DIR");
  s.origin = dir ? dir : "embedded";
  auto load = [&](const std::string& name, const std::string& relpath) {
    if (dir) return read_file(std::string(dir) + "/" + relpath);
    const auto& files = detail::embedded_data_files();
    auto it = files.find(name);
    if (it == files.end()) fail(name, "no embedded data file");
    return it->second;
  };
  for (const std::string& id : group_ids()) {
    std::string name = lower(id);
    GroupData g = parse_group(name, parse_text(name, load(name, "groups/" + name + ".json")));
    if (lower(g.id) != name) fail(name, "file id does not match its name");
    s.groups.emplace(name, std::move(g));
  }
  json err = parse_text("errata", load("errata", "errata.json"));
  std::set<std::string> ids;
  for (const json& e : need_array(err, "entries", "errata")) {
    ErratumEntry entry;
    entry.id = need_str(e, "id", "errata");
    entry.group = need_str(e, "group", "errata." + entry.id);
    entry.context = need_str(e, "context", "errata." + entry.id);
    entry.printed = need_str(e, "printed", "errata." + entry.id);
    entry.corrected = need_str(e, "corrected", "errata." + entry.id);
    entry.reason = need_str(e, "reason", "errata." + entry.id);
    if (!ids.insert(entry.id).second) fail("errata", "duplicate id " + entry.id);
    s.errata.push_back(std::move(entry));
  }
  return s;
}

const Store& store() {
  static const Store s = load_store();
  return s;
}

std::string fmt_longs(const std::vector<long>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

RatFunc nu(size_t weight_index) {
  MultiPoly p = MultiPoly::atom(weight_index == 0 ? symbolic::kP1 : symbolic::kP2);
  return RatFunc(p - MultiPoly::constant(2), p);
}

Rational eval_weights(const RatFunc& f, const std::vector<long>& w) {
  if (w.empty()) throw DataError("eval_weights: empty weight assignment");
  return f.evaluate(w[0], w.size() > 1 ? w[1] : w[0]);
}

const Stratum* GroupData::find_line(const std::string& label) const {
  for (const Stratum& s : lines)
    if (s.label == label) return &s;
  return nullptr;
}

const Stratum* GroupData::find_point(const std::string& label) const {
  for (const Stratum& s : points)
    if (s.label == label) return &s;
  return nullptr;
}

const Stratum* GroupData::find_stratum(const std::string& label) const {
  if (const Stratum* s = find_line(label)) return s;
  return find_point(label);
}

const InvariantRow* GroupData::find_invariant(const std::vector<long>& weights) const {
  for (const InvariantRow& r : invariants)
    if (r.weights == weights) return &r;
  return nullptr;
}

CombinatoricsTables GroupData::combinatorics() const {
  CombinatoricsTables t;
  t.id = id;
  t.order = order;
  t.center_order = center_order;
  t.mirror_count = mirror_count;
  t.mirror_orbits = mirror_orbits;
  t.lines = lines;
  t.points = points;
  return t;
}

const std::vector<std::string>& group_ids() {
  static const std::vector<std::string> ids = {"A4", "B4", "G28", "G29", "G30", "G31"};
  return ids;
}

const GroupData& group(const std::string& id) {
  const Store& s = store();
  auto it = s.groups.find(lower(id));
  if (it == s.groups.end()) {
    std::string known;
    for (const std::string& g : group_ids()) {
      if (!known.empty()) known += ", ";
      known += g;
    }
    throw DataError("unknown group '" + id + "' (known: " + known + ")");
  }
  return it->second;
}

const std::vector<ErratumEntry>& errata() { return store().errata; }

std::string data_origin() { return store().origin; }

std::vector<std::string> audit(const GroupData& g) {
  std::vector<std::string> problems;
  auto problem = [&](const std::string& msg) { problems.push_back(g.id + ": " + msg); };

  if (g.order != g.projective_order * g.center_order)
    problem("order != projective_order * center_order");
  long orbit_sum = 0;
  for (const MirrorOrbit& o : g.mirror_orbits) orbit_sum += o.size;
  if (orbit_sum != g.mirror_count) problem("mirror orbit sizes do not sum to mirror_count");

  // Weight formulas: kappa of an irreducible stratum is (sum_k m_k nu_k)/codim.
  auto check_kappa = [&](const Stratum& s, long codim) {
    if (!s.irreducible) return;
    RatFunc expected;
    for (size_t k = 0; k < s.mirrors.size(); ++k)
      expected = expected + RatFunc::constant(Rational(s.mirrors[k])) * nu(k);
    expected = expected / RatFunc::constant(Rational(codim));
    if (!(expected == *s.kappa))
      problem(s.label + ": kappa formula disagrees with mirror counts");
  };
  for (const Stratum& s : g.lines) check_kappa(s, 2);
  for (const Stratum& s : g.points) check_kappa(s, 3);

  // Tabulated kappa grids match the formulas.
  for (const KappaGridColumn& col : g.kappa_grid) {
    for (const auto& [label, value] : col.values) {
      const Stratum* s = g.find_stratum(label);
      if (!s || !s->kappa) {
        problem("kappa grid names unknown or reducible stratum " + label);
        continue;
      }
      if (eval_weights(*s->kappa, col.weights) != value)
        problem(label + " at " + weights_key(col.weights) + ": grid value " +
                value.str() + " disagrees with formula");
    }
  }

  // Incidences double count: |O_line| * (points per line) = |O_point| * (lines per point).
  for (const Stratum& line : g.lines) {
    for (const auto& [plabel, count] : line.incident) {
      const Stratum* point = g.find_point(plabel);
      if (!point) continue;  // existence enforced at parse time
      auto back = point->incident.find(line.label);
      if (back == point->incident.end()) {
        problem(line.label + " lists " + plabel + " but not conversely");
        continue;
      }
      if (line.size * count != point->size * back->second)
        problem("double counting fails for " + line.label + " / " + plabel);
    }
  }
  for (const Stratum& point : g.points)
    for (const auto& [llabel, count] : point.incident) {
      const Stratum* line = g.find_line(llabel);
      if (line && !line->incident.count(point.label))
        problem(point.label + " lists " + llabel + " but not conversely");
    }

  // Mirror counts through strata: lines carry >= 2 mirrors, points >= 3.
  auto mirror_sum = [](const Stratum& s) {
    long total = 0;
    for (long m : s.mirrors) total += m;
    return total;
  };
  for (const Stratum& s : g.lines)
    if (mirror_sum(s) < 2) problem(s.label + ": a line stratum carries >= 2 mirrors");
  for (const Stratum& s : g.points)
    if (mirror_sum(s) < 3) problem(s.label + ": a point stratum carries >= 3 mirrors");

  // Diagram coverage: every unordered generator pair appears exactly once
  // among braids, commuting pairs, and consecutive cycle pairs.
  {
    std::map<std::pair<int, int>, int> seen;
    auto mark = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      ++seen[{a, b}];
    };
    for (const BraidRelation& b : g.braids) mark(b.a, b.b);
    for (const auto& [a, b] : g.commuting) mark(a, b);
    for (const std::vector<int>& cyc : g.cycles)
      for (size_t i = 0; i < cyc.size(); ++i) mark(cyc[i], cyc[(i + 1) % cyc.size()]);
    const int n = static_cast<int>(g.num_generators());
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        auto it = seen.find({a, b});
        int count = it == seen.end() ? 0 : it->second;
        if (count != 1)
          problem("generator pair (" + std::to_string(a) + "," + std::to_string(b) +
                  ") covered " + std::to_string(count) + " times in the diagram");
      }
  }

  // Classification coherence.
  {
    std::set<std::vector<long>> finite(g.classification.finite.begin(),
                                       g.classification.finite.end());
    std::set<std::vector<long>> parabolic(g.classification.parabolic.begin(),
                                          g.classification.parabolic.end());
    std::set<std::vector<long>> admissible(g.classification.admissible.begin(),
                                           g.classification.admissible.end());
    if (finite.size() != g.classification.finite.size() ||
        parabolic.size() != g.classification.parabolic.size() ||
        admissible.size() != g.classification.admissible.size())
      problem("duplicate assignments in classification lists");
    for (const auto& w : admissible)
      if (finite.count(w) || parabolic.count(w))
        problem("assignment " + weights_key(w) + " is listed in two classes");
    if (g.classification.swap_symmetry)
      for (const auto& w : g.classification.admissible)
        if (w.size() == 2 && w[0] > w[1])
          problem("swap-symmetric group lists non-canonical pair " + weights_key(w));
    if (g.invariants.size() != admissible.size())
      problem("invariant rows do not match the admissible list");
    for (const auto& w : admissible)
      if (!g.find_invariant(w))
        problem("admissible assignment " + weights_key(w) + " has no invariants row");
  }

  // Invariant rows: chi < 0; hypergeometric exponents sum to twice the denominator.
  for (const InvariantRow& r : g.invariants) {
    if (r.chi.sign() >= 0) problem(weights_key(r.weights) + ": chi must be negative");
    if (r.dm) {
      long sum = 0;
      for (long m : r.dm->mu) sum += m;
      if (sum != 2 * r.dm->den)
        problem(weights_key(r.weights) + ": hypergeometric exponents must sum to 2");
    }
  }

  // Presentation: words carry recorded orders; exponent closed forms equal
  // base * |Z(G_L)| / (kappa_L - 1); slots without a closed form never reach
  // kappa > 1 on an admissible assignment.
  {
    std::set<Word> known_words;
    for (const auto& [word, order] : g.word_orders) known_words.insert(word);
    for (const CentralPower& cp : g.presentation.central_powers) {
      if (!known_words.count(cp.word))
        problem("central power word " + word_str(cp.word) + " has no recorded order");
      const Stratum* s = g.find_point(cp.stratum);
      if (!s || !s->irreducible) {
        problem("central power stratum " + cp.stratum + " is not an irreducible point");
        continue;
      }
      if (cp.exponent) {
        RatFunc expected = cp.base * RatFunc::constant(Rational(*s->center)) /
                           (*s->kappa - RatFunc::constant(1));
        if (!(expected == *cp.exponent))
          problem(cp.stratum + ": exponent closed form disagrees with base * center / (kappa - 1)");
      } else {
        for (const auto& w : g.classification.admissible)
          if (eval_weights(*s->kappa, w) > Rational(1))
            problem(cp.stratum + ": closed form missing but kappa > 1 at " + weights_key(w));
      }
    }
  }

  return problems;
}

namespace {

void diff_scalar(std::vector<DiffEntry>& out, const std::string& path,
                 const std::string& left, const std::string& right) {
  if (left != right) out.push_back({path, left, right});
}

void diff_strata(std::vector<DiffEntry>& out, const std::string& prefix,
                 const std::vector<Stratum>& left, const std::vector<Stratum>& right) {
  auto by_label = [](const std::vector<Stratum>& v) {
    std::map<std::string, const Stratum*> m;
    for (const Stratum& s : v) m[s.label] = &s;
    return m;
  };
  auto lm = by_label(left);
  auto rm = by_label(right);
  auto compare = [&](const Stratum& a, const Stratum& b) {
    const std::string p = prefix + "." + a.label;
    diff_scalar(out, p + ".size", std::to_string(a.size), std::to_string(b.size));
    diff_scalar(out, p + ".mirrors", fmt_longs(a.mirrors), fmt_longs(b.mirrors));
    diff_scalar(out, p + ".center", a.center ? std::to_string(*a.center) : "-",
                b.center ? std::to_string(*b.center) : "-");
    diff_scalar(out, p + ".irreducible", a.irreducible ? "true" : "false",
                b.irreducible ? "true" : "false");
    if (a.kappa.has_value() != b.kappa.has_value() ||
        (a.kappa && !(*a.kappa == *b.kappa)))
      out.push_back({p + ".kappa", a.kappa ? a.kappa->str() : "-",
                     b.kappa ? b.kappa->str() : "-"});
    std::set<std::string> keys;
    for (const auto& [k, v] : a.incident) keys.insert(k);
    for (const auto& [k, v] : b.incident) keys.insert(k);
    for (const std::string& k : keys) {
      auto ai = a.incident.find(k);
      auto bi = b.incident.find(k);
      diff_scalar(out, p + ".incident." + k,
                  ai == a.incident.end() ? "absent" : std::to_string(ai->second),
                  bi == b.incident.end() ? "absent" : std::to_string(bi->second));
    }
  };
  for (const Stratum& a : left) {
    auto it = rm.find(a.label);
    if (it == rm.end())
      out.push_back({prefix + "." + a.label, "present", "absent"});
    else
      compare(a, *it->second);
  }
  for (const Stratum& b : right)
    if (!lm.count(b.label)) out.push_back({prefix + "." + b.label, "absent", "present"});
}

}  // namespace

std::vector<DiffEntry> diff(const CombinatoricsTables& computed,
                            const CombinatoricsTables& curated) {
  std::vector<DiffEntry> out;
  const std::string id = curated.id.empty() ? computed.id : curated.id;
  diff_scalar(out, id + ".id", computed.id, curated.id);
  diff_scalar(out, id + ".order", std::to_string(computed.order),
              std::to_string(curated.order));
  diff_scalar(out, id + ".center_order", std::to_string(computed.center_order),
              std::to_string(curated.center_order));
  diff_scalar(out, id + ".mirror_count", std::to_string(computed.mirror_count),
              std::to_string(curated.mirror_count));
  {
    auto by_label = [](const std::vector<MirrorOrbit>& v) {
      std::map<std::string, const MirrorOrbit*> m;
      for (const MirrorOrbit& o : v) m[o.label] = &o;
      return m;
    };
    auto lm = by_label(computed.mirror_orbits);
    auto rm = by_label(curated.mirror_orbits);
    for (const MirrorOrbit& a : computed.mirror_orbits) {
      auto it = rm.find(a.label);
      if (it == rm.end()) {
        out.push_back({id + ".mirror_orbits." + a.label, "present", "absent"});
        continue;
      }
      diff_scalar(out, id + ".mirror_orbits." + a.label + ".size",
                  std::to_string(a.size), std::to_string(it->second->size));
      diff_scalar(out, id + ".mirror_orbits." + a.label + ".weight_index",
                  std::to_string(a.weight_index), std::to_string(it->second->weight_index));
    }
    for (const MirrorOrbit& b : curated.mirror_orbits)
      if (!lm.count(b.label))
        out.push_back({id + ".mirror_orbits." + b.label, "absent", "present"});
  }
  diff_strata(out, id + ".lines", computed.lines, curated.lines);
  diff_strata(out, id + ".points", computed.points, curated.points);
  return out;
}

std::vector<DiffEntry> diff(const std::map<std::vector<long>, Rational>& computed_chi,
                            const GroupData& curated) {
  std::vector<DiffEntry> out;
  for (const InvariantRow& row : curated.invariants) {
    const std::string path = curated.id + ".chi." + weights_key(row.weights);
    auto it = computed_chi.find(row.weights);
    if (it == computed_chi.end())
      out.push_back({path, "absent", row.chi.str()});
    else if (it->second != row.chi)
      out.push_back({path, it->second.str(), row.chi.str()});
  }
  for (const auto& [weights, value] : computed_chi)
    if (!curated.find_invariant(weights))
      out.push_back({curated.id + ".chi." + weights_key(weights), value.str(), "absent"});
  return out;
}

}  // namespace ballq::refdata
