#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballq/refdata.hpp"

namespace ballq::weights {

using exact::Rational;

/// Thrown for malformed weight assignments (wrong arity, weights below 2).
class WeightError : public std::runtime_error {
 public:
  explicit WeightError(const std::string& what) : std::runtime_error(what) {}
};

/// Type of the holonomy at the deepest stratum: kappa_0 = (sum of all
/// mirror weights) / 4 below, at, or above 1.
enum class Holonomy { kFinite, kParabolic, kHyperbolic };
std::string holonomy_name(Holonomy h);

/// Outcome of the half-weight integrality condition at one irreducible
/// stratum: nothing required while kappa < 1, a cusp at kappa = 1, and for
/// kappa > 1 the ratio |Z(G_L)| / (kappa - 1) must be a positive integer.
enum class StratumCondition { kNotRequired, kCusp, kIntegral, kFails };
std::string condition_name(StratumCondition c);

/// Evaluation of one irreducible stratum at a weight assignment.
struct StratumCheck {
  std::string label;
  int codim = 0;
  Rational kappa;
  StratumCondition condition = StratumCondition::kNotRequired;
  /// |Z(G_L)| / (kappa - 1), present when kappa > 1.
  std::optional<Rational> ratio;
  /// The integral branching order n_L, present when the condition holds.
  std::optional<long> n;
};

/// Full evaluation of one weight assignment on one group.
struct WeightCheck {
  std::string group_id;
  std::vector<long> weights;
  Rational kappa_origin;
  Holonomy holonomy = Holonomy::kFinite;
  bool admissible = false;  ///< hyperbolic and no stratum fails
  bool cocompact = false;   ///< admissible with no cusp stratum
  std::vector<StratumCheck> strata;  ///< irreducible strata, lines then points
  std::vector<std::string> failures;
  std::vector<std::string> cusps;
};

/// Evaluates the holonomy type and every per-stratum condition of one
/// assignment, in exact arithmetic.  Weights must all be >= 2 and match the
/// group's weight arity.
WeightCheck check(const refdata::GroupData& data, const std::vector<long>& weights);

/// The classification of every assignment with weights in [2, bound],
/// swept with an overflow-safe integer fast path.  Two-parameter groups
/// whose classes are interchangeable are canonicalized to p1 <= p2.
/// Assignments failing some stratum condition are left out entirely.
struct Classified {
  std::vector<std::vector<long>> finite;
  std::vector<std::vector<long>> parabolic;
  std::vector<std::vector<long>> admissible;
};
Classified classify_range(const refdata::GroupData& data, long bound);

/// The admissible assignments with weights in [2, bound], in lexicographic
/// order: the hyperbolic ones passing every stratum condition.
std::vector<std::vector<long>> enumerate_admissible(const refdata::GroupData& data,
                                                    long bound = 2000);

}  // namespace ballq::weights
