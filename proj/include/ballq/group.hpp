#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ballq/matrix.hpp"
#include "ballq/refdata.hpp"

namespace ballq::group {

using exact::Cyclotomic;
using exact::ExactMatrix;
using exact::Rational;

/// Thrown on closure-budget overruns and other construction failures.
class GroupError : public std::runtime_error {
 public:
  explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

/// The unitary reflection with root (mirror normal) v: x -> x - 2 <v,x>/<v,v> v.
ExactMatrix reflection_matrix(const std::vector<Cyclotomic>& root);

/// Scales a nonzero vector so its first nonzero coordinate is 1, giving a
/// canonical representative of the line it spans.
std::vector<Cyclotomic> canonical_normal(std::vector<Cyclotomic> v);

/// Canonical hash key of a coordinate vector.  Entries are embedded into
/// `conductor` first (0 = the lcm of the entries), mirroring
/// ExactMatrix::key: fix an ambient conductor when comparing vectors that
/// arrive from different computations.
std::string vector_key(const std::vector<Cyclotomic>& v, unsigned conductor = 0);

/// The canonicalized mirror normal of a reflection matrix (any matrix with
/// rank(r - I) = 1); throws GroupError for other inputs.
std::vector<Cyclotomic> reflection_normal(const ExactMatrix& r);

/// Multiplicative order of a matrix; throws GroupError past `bound`.
long matrix_order(const ExactMatrix& m, long bound = 100000);

/// One mirror of the group: canonicalized normal, the (unique, order-2)
/// reflection fixing it, and the mirror orbit it belongs to.
struct Mirror {
  std::vector<Cyclotomic> normal;
  std::string key;
  size_t reflection = 0;  ///< index into elements()
  int orbit = -1;         ///< index into mirror_orbits()
};

/// A G-orbit of mirrors, labeled by matching the curated anchor generators.
struct MirrorOrbitInfo {
  std::string label;
  int weight_index = 1;
  std::vector<size_t> mirrors;  ///< indices into mirrors()
};

/// A fully enumerated unitary reflection group: every element as an exact
/// matrix, plus its reflections, mirrors, and mirror orbits.  Read-only
/// after construction.
class BuiltGroup {
 public:
  const refdata::GroupData& data() const { return data_; }
  const std::vector<ExactMatrix>& generators() const { return generators_; }
  const std::vector<ExactMatrix>& elements() const { return elements_; }
  long order() const { return static_cast<long>(elements_.size()); }

  /// Number of scalar elements (the center, by irreducibility).
  long center_order() const { return center_order_; }

  /// Indices (into elements()) of the reflections, one per mirror.
  const std::vector<size_t>& reflections() const { return reflections_; }
  const std::vector<Mirror>& mirrors() const { return mirrors_; }
  const std::vector<MirrorOrbitInfo>& mirror_orbits() const { return mirror_orbits_; }

  /// Conductor of the cyclotomic field all element entries live in; every
  /// key used for dedup inside the group is computed at this conductor.
  unsigned conductor() const { return static_cast<unsigned>(data_.conductor); }

  /// Membership test by canonical key.
  bool contains(const ExactMatrix& m) const;
  /// Canonical key of the line spanned by `v`, at the group's conductor.
  std::string normal_key(const std::vector<Cyclotomic>& v) const {
    return vector_key(canonical_normal(v), conductor());
  }
  /// Mirror index for a normal_key(); -1 when absent.
  int mirror_index(const std::string& normal_key) const;

  /// Evaluates a generator word (negative letters are inverses).
  ExactMatrix word_matrix(const refdata::Word& word) const;

 private:
  friend BuiltGroup build_group(const refdata::GroupData&, size_t);

  refdata::GroupData data_;
  std::vector<ExactMatrix> generators_;
  std::vector<ExactMatrix> elements_;
  std::unordered_map<std::string, size_t> element_index_;
  long center_order_ = 0;
  std::vector<size_t> reflections_;
  std::vector<Mirror> mirrors_;
  std::unordered_map<std::string, size_t> mirror_index_;
  std::vector<MirrorOrbitInfo> mirror_orbits_;
};

/// Enumerates the group generated by the curated roots via breadth-first
/// closure, then extracts reflections, mirrors, mirror orbits, and the
/// center.  Throws GroupError when the closure exceeds `budget` elements or
/// when the mirror orbits cannot be matched to the curated orbit anchors.
BuiltGroup build_group(const refdata::GroupData& data, size_t budget = 200000);
BuiltGroup build_group(const std::string& id, size_t budget = 200000);

/// Structural validation of a built group against its curated data: order,
/// center order, mirror count and orbit sizes, generator unitarity and
/// orders, braid/commuting/cycle relations, word orders.  Returns
/// human-readable problems; empty means the reconstruction checks out.
std::vector<std::string> validate_group(const BuiltGroup& g);

}  // namespace ballq::group
