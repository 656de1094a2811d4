#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ballq/refdata.hpp"
#include "ballq/weights.hpp"

namespace ballq::volume {

using exact::Rational;

/// Thrown when an orbifold Euler number is requested for an assignment the
/// model does not cover (non-hyperbolic or failing a stratum condition), or
/// when the blow-up model's structural invariants break.
class VolumeError : public std::runtime_error {
 public:
  explicit VolumeError(const std::string& what) : std::runtime_error(what) {}
};

/// A point orbit whose strata get blown up (kappa > 1): the exceptional
/// divisor data of one representative.
struct BlownPoint {
  std::string label;
  long orbit_size = 0;
  Rational kappa;
  Rational delta;  ///< 2 - kappa
  Rational alpha;  ///< multiplicity of the exceptional divisor in the model
};

/// A line orbit whose strata get blown up (kappa > 1), after the points.
struct BlownLine {
  std::string label;
  long orbit_size = 0;
  Rational kappa;
  long blown_points = 0;     ///< n_j: blown points on one line, >= 2
  std::vector<long> s;       ///< per blown point orbit: how many on one line
  std::vector<long> t;       ///< per weight class: residual mirror excess of
                             ///< the non-blown points on one line
  std::vector<long> mirrors; ///< l_k: mirrors through the line, per class
  Rational beta;             ///< multiplicity of the exceptional divisor
};

/// The weighted blow-up model of one admissible-or-better assignment: the
/// arrangement's deep strata replaced by exceptional divisors, with the
/// multiplicities that make the adjusted canonical class pull back cleanly.
struct BlowupModel {
  std::string group_id;
  std::vector<long> weights;
  Rational lambda;  ///< multiplicity of the hyperplane class
  std::vector<BlownPoint> points;
  std::vector<BlownLine> lines;
};

/// Builds the blow-up model of a hyperbolic assignment and verifies its
/// structural invariants: every irreducible point on a blown line is blown,
/// each blown line carries at least two blown points, and no non-blown
/// point sees two blown lines.  Throws VolumeError when the assignment is
/// not hyperbolic or an invariant fails.
BlowupModel build_blowup_model(const refdata::GroupData& data,
                               const std::vector<long>& weights);

/// The triple self-intersection of the adjusted canonical class on the
/// blown-up model: lambda^3 plus the exceptional contributions.
Rational cube(const BlowupModel& model);

/// The orbifold Euler number chi = -cube / (16 |PG|) of an admissible
/// assignment; throws VolumeError (naming the obstruction) otherwise.
Rational chi_orb(const refdata::GroupData& data, const std::vector<long>& weights);

/// Complex-hyperbolic volume (8 pi^3 / 3) |chi| as a 12-significant-digit
/// string.  Display only: everything upstream is exact.
std::string ball_volume_str(const Rational& chi);

}  // namespace ballq::volume
