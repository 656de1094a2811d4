#include "ballq/weights.hpp"

namespace ballq::weights {

std::string holonomy_name(Holonomy h) {
  switch (h) {
    case Holonomy::kFinite: return "finite";
    case Holonomy::kParabolic: return "parabolic";
    case Holonomy::kHyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string condition_name(StratumCondition c) {
  switch (c) {
    case StratumCondition::kNotRequired: return "not required";
    case StratumCondition::kCusp: return "cusp";
    case StratumCondition::kIntegral: return "integral";
    case StratumCondition::kFails: return "fails";
  }
  return "?";
}

namespace {

void require_valid(const refdata::GroupData& data, const std::vector<long>& w) {
  if (w.size() != data.weight_names.size())
    throw WeightError(data.id + " takes " +
                      std::to_string(data.weight_names.size()) +
                      " weight(s), got " + std::to_string(w.size()));
  for (long p : w)
    if (p < 2) throw WeightError("weights must be at least 2, got " + std::to_string(p));
}

/// Total mirrors per weight class.
std::vector<long> class_totals(const refdata::GroupData& data) {
  std::vector<long> totals(data.weight_names.size(), 0);
  for (const refdata::MirrorOrbit& o : data.mirror_orbits)
    totals.at(static_cast<size_t>(o.weight_index) - 1) += o.size;
  return totals;
}

StratumCheck check_stratum(const refdata::Stratum& s, int codim,
                           const std::vector<Rational>& nu) {
  StratumCheck out;
  out.label = s.label;
  out.codim = codim;
  Rational sum;
  for (size_t k = 0; k < nu.size(); ++k) sum += Rational(s.mirrors[k]) * nu[k];
  out.kappa = sum / Rational(codim);
  if (out.kappa < Rational(1)) {
    out.condition = StratumCondition::kNotRequired;
  } else if (out.kappa == Rational(1)) {
    out.condition = StratumCondition::kCusp;
  } else {
    const Rational ratio = Rational(*s.center) / (out.kappa - Rational(1));
    out.ratio = ratio;
    if (ratio.is_integer() && ratio >= Rational(1)) {
      out.condition = StratumCondition::kIntegral;
      out.n = ratio.to_long();
    } else {
      out.condition = StratumCondition::kFails;
    }
  }
  return out;
}

}  // namespace

WeightCheck check(const refdata::GroupData& data, const std::vector<long>& weights) {
  require_valid(data, weights);
  WeightCheck out;
  out.group_id = data.id;
  out.weights = weights;

  std::vector<Rational> nu;
  for (long p : weights) nu.emplace_back(Rational(p - 2) / Rational(p));

  const std::vector<long> totals = class_totals(data);
  Rational origin;
  for (size_t k = 0; k < nu.size(); ++k) origin += Rational(totals[k]) * nu[k];
  out.kappa_origin = origin / Rational(4);
  out.holonomy = out.kappa_origin < Rational(1)    ? Holonomy::kFinite
                 : out.kappa_origin == Rational(1) ? Holonomy::kParabolic
                                                   : Holonomy::kHyperbolic;

  for (const refdata::Stratum& s : data.lines)
    if (s.irreducible) out.strata.push_back(check_stratum(s, 2, nu));
  for (const refdata::Stratum& s : data.points)
    if (s.irreducible) out.strata.push_back(check_stratum(s, 3, nu));

  for (const StratumCheck& s : out.strata) {
    if (s.condition == StratumCondition::kFails) out.failures.push_back(s.label);
    if (s.condition == StratumCondition::kCusp) out.cusps.push_back(s.label);
  }
  out.admissible = out.holonomy == Holonomy::kHyperbolic && out.failures.empty();
  out.cocompact = out.admissible && out.cusps.empty();
  return out;
}

Classified classify_range(const refdata::GroupData& data, long bound) {
  if (bound < 2) throw WeightError("bound must be at least 2");
  const size_t arity = data.weight_names.size();
  if (arity != 1 && arity != 2)
    throw WeightError(data.id + ": unsupported weight arity");

  // Integer fast path over the whole grid.  With weights <= bound the
  // quantities below stay within ~mirror_count * bound^2, far inside int64
  // for any bound a caller could sit through.
  const std::vector<long> totals = class_totals(data);
  struct Row {
    long m1, m2, codim, center;
  };
  std::vector<Row> rows;
  for (const refdata::Stratum& s : data.lines)
    if (s.irreducible)
      rows.push_back({s.mirrors[0], arity > 1 ? s.mirrors[1] : 0, 2, *s.center});
  for (const refdata::Stratum& s : data.points)
    if (s.irreducible)
      rows.push_back({s.mirrors[0], arity > 1 ? s.mirrors[1] : 0, 3, *s.center});

  Classified out;
  // Common scheme for both arities: q2 = p2 for two weights, else 1 with the
  // second class empty, so every kappa is num / den over the shared
  // denominator codim * p1 * q2 (4 * p1 * q2 at the origin).
  auto classify_one = [&](long p1, long p2) {
    const long q2 = arity == 2 ? p2 : 1;
    const long den4 = 4 * p1 * q2;
    const long onum = totals[0] * (p1 - 2) * q2 +
                      (arity == 2 ? totals[1] * (p2 - 2) * p1 : 0);
    std::vector<long> w = arity == 2 ? std::vector<long>{p1, p2}
                                     : std::vector<long>{p1};
    if (onum < den4) {
      out.finite.push_back(std::move(w));
      return;
    }
    if (onum == den4) {
      out.parabolic.push_back(std::move(w));
      return;
    }
    for (const Row& r : rows) {
      const long den = r.codim * p1 * q2;
      const long num = r.m1 * (p1 - 2) * q2 + (arity == 2 ? r.m2 * (p2 - 2) * p1 : 0);
      if (num <= den) continue;  // kappa <= 1: no integrality required
      if ((r.center * den) % (num - den) != 0) return;  // ratio not integral
    }
    out.admissible.push_back(std::move(w));
  };

  for (long p1 = 2; p1 <= bound; ++p1) {
    if (arity == 1) {
      classify_one(p1, 0);
      continue;
    }
    for (long p2 = data.classification.swap_symmetry ? p1 : 2; p2 <= bound; ++p2)
      classify_one(p1, p2);
  }
  return out;
}

std::vector<std::vector<long>> enumerate_admissible(const refdata::GroupData& data,
                                                    long bound) {
  return classify_range(data, bound).admissible;
}

}  // namespace ballq::weights
