#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ballq/cyclotomic.hpp"
#include "ballq/rational.hpp"
#include "ballq/symbolic.hpp"

namespace ballq::refdata {

using exact::Cyclotomic;
using exact::Rational;

/// Thrown on malformed, missing, or schema-violating data files.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A word in the group generators: 1-based indices, negative for inverses
/// (e.g. {1, 2, -3, 4, 3} reads r1 r2 r3^-1 r4 r3).
using Word = std::vector<int>;

/// Formats a word like "r1 r2 r3^-1" using 1-based generator numbering.
std::string word_str(const Word& word);

/// br_length(r_a, r_b): abab... = baba... with `length` factors on each side.
struct BraidRelation {
  int a = 0;
  int b = 0;
  int length = 0;
};

/// Braid relation between two words rather than single generators.
struct WordBraid {
  Word a;
  Word b;
  int length = 0;
};

/// One orbit of mirrors.  `anchor` is a generator index whose mirror lies in
/// the orbit; `weight_index` (1-based) says which weight parameter the orbit
/// carries.
struct MirrorOrbit {
  std::string label;
  long size = 0;
  int anchor = 0;
  int weight_index = 0;
};

/// One orbit of intersection strata (a line orbit or a point orbit of the
/// projectivized arrangement).  `mirrors` counts the mirrors through the
/// stratum per mirror orbit.  `center` (the order of the center of the
/// pointwise stabilizer) and the symbolic weight `kappa` are present exactly
/// for irreducible strata.  `incident` maps the labels of the complementary
/// dimension to incidence multiplicities: for a line orbit, how many points
/// of each point orbit lie on one line; for a point orbit, how many lines of
/// each line orbit pass through one point.
struct Stratum {
  std::string label;
  long size = 0;
  std::vector<long> mirrors;
  std::optional<long> center;
  bool irreducible = false;
  std::optional<symbolic::RatFunc> kappa;
  std::vector<Word> defining;
  std::map<std::string, long> incident;
  std::string ref;
};

/// One column of the tabulated kappa values: a weight assignment together
/// with the exact kappa of each listed stratum at that assignment.
struct KappaGridColumn {
  std::vector<long> weights;
  std::map<std::string, Rational> values;
};

/// An infinite family of weight assignments with finite holonomy, described
/// in prose (only B4 has one).
struct FiniteFamily {
  std::string pattern;
  std::string description;
};

/// A curated example of a hyperbolic assignment that fails the half-weight
/// integrality test (used as a negative-control oracle).
struct SchwarzFailure {
  std::vector<long> weights;
  std::string stratum;
  Rational ratio;
  std::string note;
};

/// Which weight assignments are finite / parabolic / admissible hyperbolic.
struct Classification {
  std::vector<std::vector<long>> finite;
  std::map<std::string, std::string> finite_notes;
  std::optional<FiniteFamily> finite_family;
  std::vector<std::vector<long>> parabolic;
  std::vector<std::vector<long>> admissible;
  bool swap_symmetry = false;
  std::optional<SchwarzFailure> schwarz_failure_example;
};

/// Generator order relation r_g^{p_k} = 1.
struct OrderRelation {
  int generator = 0;
  int weight_index = 0;
};

/// Central power relation attached to a point stratum: the relation
/// (word)^e = 1 where e = base * n_L.  `base` may depend on the weights
/// (it does for G31).  `exponent` is the closed form of e as a function of
/// the weights; it is absent for slots whose stratum never becomes
/// hyperbolic at an admissible assignment (the relation is then never
/// emitted).
struct CentralPower {
  Word word;
  std::string stratum;
  symbolic::RatFunc base;
  std::optional<symbolic::RatFunc> exponent;
};

struct PresentationData {
  std::vector<OrderRelation> order_relations;
  std::vector<CentralPower> central_powers;
};

/// Ball (n+1)-tuple data for the assignments whose lattice is also a
/// hypergeometric monodromy group: the integer exponents mu_i over a common
/// denominator, and the index of the two-[mirror]-orbit lattice inside (or
/// equal to) the hypergeometric one.
struct DMData {
  std::vector<long> mu;
  long den = 0;
  long index = 0;
};

/// One row of the invariants table for an admissible weight assignment.
/// `arithmetic` and `trace_field` are curated metadata (attributed to
/// external computations); `chi` and `cocompact` are recomputed by the
/// engine and cross-checked against these values.
struct InvariantRow {
  std::vector<long> weights;
  Rational chi;
  bool cocompact = false;
  bool arithmetic = false;
  std::string trace_field;
  std::optional<DMData> dm;
  std::string ref;
};

/// The purely combinatorial slice of the curated tables — the part the
/// arrangement engine recomputes from scratch.  Field-by-field comparison
/// via diff() below; identity metadata (anchors, defining words, refs) is
/// not compared.
struct CombinatoricsTables {
  std::string id;
  long order = 0;
  long center_order = 0;
  long mirror_count = 0;
  std::vector<MirrorOrbit> mirror_orbits;
  std::vector<Stratum> lines;
  std::vector<Stratum> points;
};

/// Everything the data file records about one group.
struct GroupData {
  std::string id;
  std::string display;
  long order = 0;
  long center_order = 0;
  long projective_order = 0;
  long mirror_count = 0;
  int rank = 0;
  unsigned conductor = 1;
  std::vector<std::string> weight_names;
  std::vector<std::string> generator_names;
  /// One root (mirror normal) per generator, each of length `rank`.
  std::vector<std::vector<Cyclotomic>> roots;
  std::vector<BraidRelation> braids;
  std::vector<std::pair<int, int>> commuting;
  std::vector<std::vector<int>> cycles;
  std::vector<WordBraid> word_braids;
  std::vector<std::pair<Word, long>> word_orders;
  std::vector<MirrorOrbit> mirror_orbits;
  std::vector<Stratum> lines;
  std::vector<Stratum> points;
  std::vector<KappaGridColumn> kappa_grid;
  Classification classification;
  PresentationData presentation;
  std::vector<InvariantRow> invariants;

  size_t num_generators() const { return generator_names.size(); }
  size_t num_weights() const { return weight_names.size(); }

  /// Looks up a stratum (line or point) by label; nullptr when absent.
  const Stratum* find_stratum(const std::string& label) const;
  const Stratum* find_line(const std::string& label) const;
  const Stratum* find_point(const std::string& label) const;
  /// Looks up the invariants row for a weight assignment; nullptr if absent.
  const InvariantRow* find_invariant(const std::vector<long>& weights) const;
  /// Copies the combinatorial slice for comparison against computed tables.
  CombinatoricsTables combinatorics() const;
};

/// One recorded misprint in the upstream tables (the curated files ship the
/// corrected values; this preserves the printed reading and the argument).
struct ErratumEntry {
  std::string id;
  std::string group;
  std::string context;
  std::string printed;
  std::string corrected;
  std::string reason;
};

/// A single field-level disagreement found by diff().
struct DiffEntry {
  std::string path;
  std::string left;
  std::string right;
  std::string str() const { return path + ": " + left + " != " + right; }
};

/// The exponent fraction nu_k = (p_k - 2) / p_k carried by mirrors of
/// weight class k (0-based index into weight_names).
symbolic::RatFunc nu(size_t weight_index);

/// Evaluates a weight formula at an assignment; single-parameter groups
/// pass one weight, two-parameter groups pass (p1, p2).
Rational eval_weights(const symbolic::RatFunc& f, const std::vector<long>& w);

/// Canonical group ids, in display order: A4, B4, G28, G29, G30, G31.
const std::vector<std::string>& group_ids();

/// Loads (once, then cached) the curated tables for a group.  Ids are
/// case-insensitive.  Throws DataError for unknown ids or malformed data.
const GroupData& group(const std::string& id);

/// The recorded misprint list.
const std::vector<ErratumEntry>& errata();

/// "embedded", or the directory named by $BALLQ_DATA_DIR when the override
/// is active.  The choice is made once, at first load.
std::string data_origin();

/// Internal-consistency audit of one group's curated tables: double
/// counting of incidences, kappa formulas against the tabulated grids and
/// against the mirror counts, classification coherence, presentation
/// exponent identities, braid-pair coverage.  Returns human-readable
/// problems; empty means clean.
std::vector<std::string> audit(const GroupData& g);

/// Field-by-field comparison of two combinatorics tables (computed vs
/// curated).  Empty result iff they agree on every compared field.  Output
/// order is stable: header fields, then mirror orbits, lines, points in
/// left-to-right label order (right-only labels last).
std::vector<DiffEntry> diff(const CombinatoricsTables& computed,
                            const CombinatoricsTables& curated);

/// Comparison of a computed chi table (weights -> exact value) against the
/// curated invariant rows of a group.  Rows missing on either side are
/// reported as differences.
std::vector<DiffEntry> diff(const std::map<std::vector<long>, Rational>& computed_chi,
                            const GroupData& curated);

}  // namespace ballq::refdata
