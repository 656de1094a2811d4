#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballq/group.hpp"
#include "ballq/symbolic.hpp"

namespace ballq::arrangement {

using exact::Cyclotomic;
using exact::ExactMatrix;
using exact::Rational;
using symbolic::RatFunc;

/// Thrown when the enumerated arrangement cannot be reconciled with the
/// curated anchors (defining words that miss every flat, ambiguous labels).
class ArrangementError : public std::runtime_error {
 public:
  explicit ArrangementError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical representative of the row span of the given vectors: the
/// nonzero rows of the reduced row echelon form, as a rank x n matrix.
ExactMatrix row_span(const std::vector<std::vector<Cyclotomic>>& rows);

/// One intersection flat of the mirror arrangement.  The flat is stored
/// through the span of the mirror normals vanishing on it; `rref` has one
/// row per codimension and is the canonical representative of that span.
struct Flat {
  ExactMatrix rref;
  std::vector<size_t> mirrors;  ///< mirrors through the flat, ascending
  int orbit = -1;               ///< index into the orbit list of its codim
};

/// A G-orbit of flats together with the local data of its pointwise
/// stabilizer G_L = <reflections through L> (computed on a representative;
/// conjugation makes it orbit-invariant).  `center_order` and `kappa` are
/// present exactly when G_L acts irreducibly on the normal directions.
struct FlatOrbit {
  std::string label;
  int codim = 0;
  std::vector<size_t> members;  ///< flat indices, ascending; front() = rep
  std::vector<long> mirror_counts;  ///< mirrors through the rep, per weight class
  long stabilizer_order = 0;        ///< |G_L|
  bool irreducible = false;
  std::optional<long> center_order;  ///< |Z(G_L)|
  std::optional<RatFunc> kappa;      ///< (sum_k m_k nu_k) / codim
  /// Incidence profile of one representative: label of the complementary
  /// codimension's orbit -> how many of its flats meet the representative.
  std::map<std::string, long> incident;

  size_t representative() const { return members.front(); }
};

/// The projectivized mirror arrangement of a built group: all codimension-2
/// flats ("lines") and codimension-3 flats ("points"), their incidences,
/// and their G-orbits labeled through the curated defining words.
struct MirrorArrangement {
  std::string group_id;
  std::vector<Flat> lines;
  std::vector<Flat> points;
  std::vector<FlatOrbit> line_orbits;
  std::vector<FlatOrbit> point_orbits;
  std::vector<std::vector<size_t>> points_on_line;
  std::vector<std::vector<size_t>> lines_through_point;

  /// Orbit lookup by label across both codimensions; nullptr when absent.
  const FlatOrbit* find_orbit(const std::string& label) const;

  /// The computed counterpart of the curated combinatorics tables, ready
  /// for refdata::diff.  Defining words and refs stay empty: labels are the
  /// only place curated anchors enter the computation.
  refdata::CombinatoricsTables tables() const;

 private:
  friend MirrorArrangement build_arrangement(const group::BuiltGroup&);
  refdata::CombinatoricsTables header_;
};

/// Enumerates the arrangement of a built group: lines from pairs of
/// mirrors, points from lines extended by a third mirror, orbits under the
/// generator action on spans, pointwise stabilizers by closure of the
/// reflections through each representative, irreducibility from
/// connectivity of the non-orthogonality graph on those mirrors, and orbit
/// labels from the curated defining words.
MirrorArrangement build_arrangement(const group::BuiltGroup& g);

/// Independent cross-checks of a built arrangement against the group it
/// came from: every orbit's stabilizer order equals a brute-force count of
/// the elements fixing the representative pointwise (over all |G| elements),
/// orbit sizes partition the flats and satisfy |orbit| * |G_L| | |G|,
/// mirror counts are constant along each orbit, and the two sides of every
/// incidence pair double-count consistently.  Returns human-readable
/// problems; empty means the arrangement checks out.
std::vector<std::string> validate_arrangement(const group::BuiltGroup& g,
                                              const MirrorArrangement& a);

}  // namespace ballq::arrangement
