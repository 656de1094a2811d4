#include "ballq/arrangement.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

namespace ballq::arrangement {

ExactMatrix row_span(const std::vector<std::vector<Cyclotomic>>& rows) {
  const exact::EchelonResult ech = echelonize(ExactMatrix::from_rows(rows));
  std::vector<std::vector<Cyclotomic>> top;
  for (size_t r = 0; r < ech.rank; ++r) {
    std::vector<Cyclotomic> row;
    for (size_t c = 0; c < ech.reduced.cols(); ++c) row.push_back(ech.reduced.at(r, c));
    top.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(top);
}

namespace {

std::vector<std::vector<Cyclotomic>> matrix_rows(const ExactMatrix& m) {
  std::vector<std::vector<Cyclotomic>> rows(m.rows());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c));
  return rows;
}

/// Basis of the flat itself (the joint kernel of the conjugated normals):
/// rref rows n satisfy <n, x> = conj(n) . x = 0 on the flat.
std::vector<std::vector<Cyclotomic>> flat_basis(const ExactMatrix& rref) {
  std::vector<std::vector<Cyclotomic>> conj_rows = matrix_rows(rref);
  for (auto& row : conj_rows)
    for (auto& e : row) e = e.conj();
  return echelonize(ExactMatrix::from_rows(conj_rows)).kernel;
}

bool fixes_pointwise(const ExactMatrix& g,
                     const std::vector<std::vector<Cyclotomic>>& basis) {
  for (const auto& v : basis)
    if (g.apply(v) != v) return false;
  return true;
}

/// Breadth-first closure of a set of unitary matrices, keyed at `conductor`.
std::vector<ExactMatrix> closure(const std::vector<ExactMatrix>& gens,
                                 unsigned conductor, size_t budget) {
  std::vector<ExactMatrix> elements;
  std::unordered_map<std::string, size_t> index;
  auto add = [&](ExactMatrix m) {
    std::string key = m.key(conductor);
    if (index.count(key)) return;
    if (elements.size() >= budget)
      throw ArrangementError("stabilizer closure exceeded the budget of " +
                             std::to_string(budget) + " elements");
    index.emplace(std::move(key), elements.size());
    elements.push_back(std::move(m));
  };
  if (gens.empty()) throw ArrangementError("stabilizer closure needs generators");
  add(ExactMatrix::identity(gens.front().rows()));
  for (size_t next = 0; next < elements.size(); ++next) {
    const ExactMatrix current = elements[next];  // copy: the vector grows
    for (const ExactMatrix& gen : gens) add(current * gen);
  }
  return elements;
}

/// Connectivity of the graph on `mirrors` whose edges join non-orthogonal
/// pairs; connected components correspond to the irreducible factors of the
/// reflection group they generate.
bool non_orthogonality_connected(const group::BuiltGroup& g,
                                 const std::vector<size_t>& mirrors) {
  if (mirrors.empty()) return false;
  std::vector<char> seen(mirrors.size(), 0);
  std::vector<size_t> queue = {0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const auto& a = g.mirrors()[mirrors[queue[head]]].normal;
    for (size_t j = 0; j < mirrors.size(); ++j) {
      if (seen[j]) continue;
      const auto& b = g.mirrors()[mirrors[j]].normal;
      if (!exact::hermitian_inner(a, b).is_zero()) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  return queue.size() == mirrors.size();
}

/// Mirror count per weight class (1-based weight_index -> 0-based slot).
std::vector<long> count_by_class(const group::BuiltGroup& g,
                                 const std::vector<size_t>& mirrors,
                                 size_t num_classes) {
  std::vector<long> counts(num_classes, 0);
  for (size_t m : mirrors) {
    const int orbit = g.mirrors()[m].orbit;
    const int w = g.mirror_orbits()[static_cast<size_t>(orbit)].weight_index;
    counts.at(static_cast<size_t>(w) - 1) += 1;
  }
  return counts;
}

struct FlatPool {
  std::vector<Flat> flats;
  std::unordered_map<std::string, size_t> index;  // rref key -> flat index

  /// Index of the flat with this span, inserting it when new.
  size_t intern(ExactMatrix rref, unsigned conductor) {
    std::string key = rref.key(conductor);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const size_t id = flats.size();
    index.emplace(std::move(key), id);
    Flat f;
    f.rref = std::move(rref);
    flats.push_back(std::move(f));
    return id;
  }

  int lookup(const ExactMatrix& rref, unsigned conductor) const {
    auto it = index.find(rref.key(conductor));
    return it == index.end() ? -1 : static_cast<int>(it->second);
  }
};

/// Orbits of a pool of flats under the generator action on spans: a span
/// with rows n^T maps to the span with rows (g n)^T.
std::vector<FlatOrbit> flat_orbits(const group::BuiltGroup& g, FlatPool& pool,
                                   int codim) {
  std::vector<FlatOrbit> orbits;
  for (size_t start = 0; start < pool.flats.size(); ++start) {
    if (pool.flats[start].orbit != -1) continue;
    const int id = static_cast<int>(orbits.size());
    FlatOrbit orbit;
    orbit.codim = codim;
    orbit.members = {start};
    pool.flats[start].orbit = id;
    for (size_t head = 0; head < orbit.members.size(); ++head) {
      const std::vector<std::vector<Cyclotomic>> rows =
          matrix_rows(pool.flats[orbit.members[head]].rref);
      for (const ExactMatrix& gen : g.generators()) {
        std::vector<std::vector<Cyclotomic>> moved;
        for (const auto& row : rows) moved.push_back(gen.apply(row));
        const int target = pool.lookup(row_span(moved), g.conductor());
        if (target < 0)
          throw ArrangementError(g.data().id +
                                 ": generator action leaves the flat set");
        Flat& f = pool.flats[static_cast<size_t>(target)];
        if (f.orbit == -1) {
          f.orbit = id;
          orbit.members.push_back(static_cast<size_t>(target));
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// Local stabilizer data of one orbit, computed on its representative.
void fill_local_data(const group::BuiltGroup& g, const FlatPool& pool,
                     FlatOrbit& orbit) {
  const Flat& rep = pool.flats[orbit.representative()];
  orbit.mirror_counts = count_by_class(g, rep.mirrors, g.data().weight_names.size());

  std::vector<ExactMatrix> gens;
  for (size_t m : rep.mirrors) gens.push_back(g.elements()[g.mirrors()[m].reflection]);
  const std::vector<ExactMatrix> stabilizer = closure(gens, g.conductor(), 8192);
  orbit.stabilizer_order = static_cast<long>(stabilizer.size());

  orbit.irreducible = non_orthogonality_connected(g, rep.mirrors);
  if (!orbit.irreducible) return;

  long central = 0;
  for (const ExactMatrix& h : stabilizer) {
    bool commutes = true;
    for (const ExactMatrix& gen : gens)
      if (h * gen != gen * h) {
        commutes = false;
        break;
      }
    if (commutes) ++central;
  }
  orbit.center_order = central;

  RatFunc weighted = RatFunc::constant(Rational(0));
  for (size_t k = 0; k < orbit.mirror_counts.size(); ++k)
    weighted = weighted +
               RatFunc::constant(Rational(orbit.mirror_counts[k])) * refdata::nu(k);
  orbit.kappa = weighted / RatFunc::constant(Rational(orbit.codim));
}

/// Attach the curated label to the orbit containing the flat cut out by the
/// stratum's defining words.
void label_orbits(const group::BuiltGroup& g, const FlatPool& pool,
                  std::vector<FlatOrbit>& orbits,
                  const std::vector<refdata::Stratum>& curated, int codim) {
  for (const refdata::Stratum& s : curated) {
    std::vector<std::vector<Cyclotomic>> normals;
    for (const refdata::Word& w : s.defining)
      normals.push_back(group::reflection_normal(g.word_matrix(w)));
    const ExactMatrix span = row_span(normals);
    if (static_cast<int>(span.rows()) != codim)
      throw ArrangementError(g.data().id + ": defining words of " + s.label +
                             " span codimension " + std::to_string(span.rows()));
    const int flat = pool.lookup(span, g.conductor());
    if (flat < 0)
      throw ArrangementError(g.data().id + ": defining words of " + s.label +
                             " miss every enumerated flat");
    FlatOrbit& orbit = orbits[static_cast<size_t>(
        pool.flats[static_cast<size_t>(flat)].orbit)];
    if (!orbit.label.empty() && orbit.label != s.label)
      throw ArrangementError(g.data().id + ": labels " + orbit.label + " and " +
                             s.label + " land in one orbit");
    orbit.label = s.label;
  }
  int unlabeled = 0;
  for (FlatOrbit& orbit : orbits)
    if (orbit.label.empty())
      orbit.label = "unlabeled_codim" + std::to_string(orbit.codim) + "_" +
                    std::to_string(unlabeled++);
}

refdata::Stratum to_stratum(const FlatOrbit& orbit,
                            const std::map<std::string, long>& incident) {
  refdata::Stratum s;
  s.label = orbit.label;
  s.size = static_cast<long>(orbit.members.size());
  s.mirrors = orbit.mirror_counts;
  s.center = orbit.center_order;
  s.irreducible = orbit.irreducible;
  s.kappa = orbit.kappa;
  s.incident = incident;
  return s;
}

}  // namespace

const FlatOrbit* MirrorArrangement::find_orbit(const std::string& label) const {
  for (const FlatOrbit& o : line_orbits)
    if (o.label == label) return &o;
  for (const FlatOrbit& o : point_orbits)
    if (o.label == label) return &o;
  return nullptr;
}

refdata::CombinatoricsTables MirrorArrangement::tables() const {
  refdata::CombinatoricsTables t = header_;
  for (const FlatOrbit& o : line_orbits) t.lines.push_back(to_stratum(o, o.incident));
  for (const FlatOrbit& o : point_orbits) t.points.push_back(to_stratum(o, o.incident));
  return t;
}

MirrorArrangement build_arrangement(const group::BuiltGroup& g) {
  MirrorArrangement arr;
  arr.group_id = g.data().id;
  const unsigned N = g.conductor();

  // Lines: spans of pairs of mirror normals that are rank 2.
  FlatPool lines;
  const size_t n_mirrors = g.mirrors().size();
  for (size_t a = 0; a + 1 < n_mirrors; ++a)
    for (size_t b = a + 1; b < n_mirrors; ++b) {
      const ExactMatrix span =
          row_span({g.mirrors()[a].normal, g.mirrors()[b].normal});
      if (span.rows() == 2) lines.intern(span, N);
    }

  // One pass per line over all mirrors: a mirror whose normal lies in the
  // span passes through the line; otherwise the extended span is a point
  // on the line.
  FlatPool points;
  std::vector<std::set<size_t>> points_on(lines.flats.size());
  for (size_t li = 0; li < lines.flats.size(); ++li) {
    Flat& line = lines.flats[li];
    const std::vector<std::vector<Cyclotomic>> rows = matrix_rows(line.rref);
    for (size_t m = 0; m < n_mirrors; ++m) {
      std::vector<std::vector<Cyclotomic>> stacked = rows;
      stacked.push_back(g.mirrors()[m].normal);
      const ExactMatrix span = row_span(stacked);
      if (span.rows() == 2)
        line.mirrors.push_back(m);
      else
        points_on[li].insert(points.intern(span, N));
    }
  }

  // Mirrors through a point: every mirror through P pairs with another into
  // a line through P, so the union over the incident lines is exhaustive.
  std::vector<std::set<size_t>> point_mirrors(points.flats.size());
  arr.points_on_line.resize(lines.flats.size());
  arr.lines_through_point.resize(points.flats.size());
  for (size_t li = 0; li < lines.flats.size(); ++li)
    for (size_t pi : points_on[li]) {
      point_mirrors[pi].insert(lines.flats[li].mirrors.begin(),
                               lines.flats[li].mirrors.end());
      arr.points_on_line[li].push_back(pi);
      arr.lines_through_point[pi].push_back(li);
    }
  for (size_t pi = 0; pi < points.flats.size(); ++pi)
    points.flats[pi].mirrors.assign(point_mirrors[pi].begin(),
                                    point_mirrors[pi].end());

  arr.line_orbits = flat_orbits(g, lines, 2);
  arr.point_orbits = flat_orbits(g, points, 3);
  for (FlatOrbit& o : arr.line_orbits) fill_local_data(g, lines, o);
  for (FlatOrbit& o : arr.point_orbits) fill_local_data(g, points, o);
  label_orbits(g, lines, arr.line_orbits, g.data().lines, 2);
  label_orbits(g, points, arr.point_orbits, g.data().points, 3);

  // Incidence profiles of the representatives.
  for (FlatOrbit& o : arr.line_orbits)
    for (size_t pi : arr.points_on_line[o.representative()])
      o.incident[arr.point_orbits[static_cast<size_t>(
                     points.flats[pi].orbit)].label] += 1;
  for (FlatOrbit& o : arr.point_orbits)
    for (size_t li : arr.lines_through_point[o.representative()])
      o.incident[arr.line_orbits[static_cast<size_t>(
                     lines.flats[li].orbit)].label] += 1;

  arr.lines = std::move(lines.flats);
  arr.points = std::move(points.flats);

  arr.header_.id = g.data().id;
  arr.header_.order = g.order();
  arr.header_.center_order = g.center_order();
  arr.header_.mirror_count = static_cast<long>(g.mirrors().size());
  for (const group::MirrorOrbitInfo& o : g.mirror_orbits()) {
    refdata::MirrorOrbit mo;
    mo.label = o.label;
    mo.size = static_cast<long>(o.mirrors.size());
    mo.weight_index = o.weight_index;
    arr.header_.mirror_orbits.push_back(std::move(mo));
  }
  return arr;
}

std::vector<std::string> validate_arrangement(const group::BuiltGroup& g,
                                              const MirrorArrangement& a) {
  std::vector<std::string> problems;
  const std::string id = g.data().id;
  auto problem = [&](const std::string& msg) { problems.push_back(id + ": " + msg); };

  auto check_codim = [&](const std::vector<Flat>& flats,
                         const std::vector<FlatOrbit>& orbits, int codim) {
    const size_t min_mirrors = codim == 2 ? 2 : 3;
    size_t covered = 0;
    for (const FlatOrbit& orbit : orbits) {
      covered += orbit.members.size();
      const long product =
          static_cast<long>(orbit.members.size()) * orbit.stabilizer_order;
      if (product == 0 || g.order() % product != 0)
        problem(orbit.label + ": |orbit| * |G_L| = " + std::to_string(product) +
                " does not divide |G|");

      // Steinberg: the reflections through the flat generate the full
      // pointwise stabilizer; count the fixing elements directly.
      const Flat& rep = flats[orbit.representative()];
      const auto basis = flat_basis(rep.rref);
      if (basis.size() + static_cast<size_t>(codim) != g.mirrors().front().normal.size())
        problem(orbit.label + ": flat basis has the wrong dimension");
      long fixers = 0;
      for (const ExactMatrix& e : g.elements())
        if (fixes_pointwise(e, basis)) ++fixers;
      if (fixers != orbit.stabilizer_order)
        problem(orbit.label + ": " + std::to_string(fixers) +
                " elements fix the flat pointwise but the reflections through "
                "it generate " + std::to_string(orbit.stabilizer_order));

      // Mirror counts must be constant along the orbit.
      for (size_t member : orbit.members) {
        if (flats[member].mirrors.size() < min_mirrors)
          problem(orbit.label + ": a member has fewer than " +
                  std::to_string(min_mirrors) + " mirrors");
        if (count_by_class(g, flats[member].mirrors,
                           g.data().weight_names.size()) != orbit.mirror_counts) {
          problem(orbit.label + ": mirror counts vary along the orbit");
          break;
        }
      }
    }
    if (covered != flats.size())
      problem("codim " + std::to_string(codim) + " orbits cover " +
              std::to_string(covered) + " of " + std::to_string(flats.size()) +
              " flats");
  };
  check_codim(a.lines, a.line_orbits, 2);
  check_codim(a.points, a.point_orbits, 3);

  // Each incidence pair double counts: |O_line| * (points of O_pt on a line)
  // must equal |O_pt| * (lines of O_line through a point).
  for (const FlatOrbit& lo : a.line_orbits)
    for (const auto& [plabel, count] : lo.incident) {
      const FlatOrbit* po = a.find_orbit(plabel);
      if (po == nullptr) {
        problem(lo.label + ": incident orbit " + plabel + " not found");
        continue;
      }
      auto back = po->incident.find(lo.label);
      const long reverse = back == po->incident.end() ? 0 : back->second;
      if (static_cast<long>(lo.members.size()) * count !=
          static_cast<long>(po->members.size()) * reverse)
        problem("incidence " + lo.label + " / " + plabel +
                " double counts inconsistently");
    }

  return problems;
}

}  // namespace ballq::arrangement
