#include "ballq/volume.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace ballq::volume {

namespace {

Rational stratum_kappa(const refdata::Stratum& s, int codim,
                       const std::vector<Rational>& nu) {
  Rational sum;
  for (size_t k = 0; k < nu.size(); ++k) sum += Rational(s.mirrors[k]) * nu[k];
  return sum / Rational(codim);
}

}  // namespace

BlowupModel build_blowup_model(const refdata::GroupData& data,
                               const std::vector<long>& weights) {
  const weights::WeightCheck wc = weights::check(data, weights);
  if (wc.holonomy != weights::Holonomy::kHyperbolic)
    throw VolumeError(data.id + ": the assignment is " +
                      weights::holonomy_name(wc.holonomy) +
                      "; the blow-up model needs a hyperbolic one");

  BlowupModel model;
  model.group_id = data.id;
  model.weights = weights;

  std::vector<Rational> nu;
  for (long p : weights) nu.emplace_back(Rational(p - 2) / Rational(p));

  Rational mirror_weight;
  for (const refdata::MirrorOrbit& o : data.mirror_orbits)
    mirror_weight += Rational(o.size) * nu[static_cast<size_t>(o.weight_index) - 1];
  model.lambda = Rational(-4) + mirror_weight;

  // Blown points: irreducible point orbits with kappa > 1.
  std::map<std::string, size_t> blown_point_index;
  for (const refdata::Stratum& s : data.points) {
    if (!s.irreducible) continue;
    const Rational kappa = stratum_kappa(s, 3, nu);
    if (kappa <= Rational(1)) continue;
    BlownPoint bp;
    bp.label = s.label;
    bp.orbit_size = s.size;
    bp.kappa = kappa;
    bp.delta = Rational(2) - kappa;
    bp.alpha = Rational(2) + bp.delta;
    for (size_t k = 0; k < nu.size(); ++k)
      bp.alpha -= Rational(s.mirrors[k]) * nu[k];
    blown_point_index.emplace(bp.label, model.points.size());
    model.points.push_back(std::move(bp));
  }

  // Blown lines: irreducible line orbits with kappa > 1, blown up after
  // their points, so the strict transform meets n_j disjoint divisors.
  for (const refdata::Stratum& s : data.lines) {
    if (!s.irreducible) continue;
    const Rational kappa = stratum_kappa(s, 2, nu);
    if (kappa <= Rational(1)) continue;
    BlownLine bl;
    bl.label = s.label;
    bl.orbit_size = s.size;
    bl.kappa = kappa;
    bl.mirrors = s.mirrors;
    bl.s.assign(model.points.size(), 0);
    bl.t.assign(nu.size(), 0);
    for (const auto& [plabel, count] : s.incident) {
      const refdata::Stratum* p = data.find_point(plabel);
      if (p == nullptr)
        throw VolumeError(data.id + ": " + s.label +
                          " meets unknown point orbit " + plabel);
      auto it = blown_point_index.find(plabel);
      if (it != blown_point_index.end()) {
        bl.s[it->second] = count;
        bl.blown_points += count;
      } else {
        if (p->irreducible)
          throw VolumeError(data.id + ": irreducible point " + plabel +
                            " on blown line " + s.label + " is not blown");
        for (size_t k = 0; k < nu.size(); ++k)
          bl.t[k] += count * (p->mirrors[k] - s.mirrors[k]);
      }
    }
    if (bl.blown_points < 2)
      throw VolumeError(data.id + ": blown line " + s.label + " carries " +
                        std::to_string(bl.blown_points) + " blown points");

    const Rational n(bl.blown_points);
    Rational beta = Rational(1) + (n - Rational(3)) / (n - Rational(1));
    for (size_t k = 0; k < nu.size(); ++k)
      beta -= Rational(bl.mirrors[k]) * nu[k];
    Rational residue;
    for (size_t k = 0; k < nu.size(); ++k) residue += Rational(bl.t[k]) * nu[k];
    for (size_t i = 0; i < bl.s.size(); ++i)
      residue += Rational(bl.s[i]) * model.points[i].delta;
    beta += residue / (n - Rational(1));
    bl.beta = beta;
    model.lines.push_back(std::move(bl));
  }

  // Strict transforms of distinct blown lines must be disjoint: a non-blown
  // point may lie on at most one blown line.
  for (const refdata::Stratum& p : data.points) {
    if (blown_point_index.count(p.label)) continue;
    long through = 0;
    for (const BlownLine& bl : model.lines) {
      auto it = p.incident.find(bl.label);
      if (it != p.incident.end()) through += it->second;
    }
    if (through > 1)
      throw VolumeError(data.id + ": non-blown point " + p.label + " lies on " +
                        std::to_string(through) + " blown lines");
  }

  return model;
}

Rational cube(const BlowupModel& model) {
  Rational total = model.lambda * model.lambda * model.lambda;
  for (const BlownPoint& bp : model.points)
    total += Rational(bp.orbit_size) * bp.alpha * bp.alpha * bp.alpha;
  for (const BlownLine& bl : model.lines) {
    // The strict transform is a ruled surface over the line: its cube is
    // (2n - 2) beta^3, and it meets the hyperplane and point divisors in
    // -3 beta^2 (lambda + sum_i s_i alpha_i).
    Rational meets = model.lambda;
    for (size_t i = 0; i < bl.s.size(); ++i)
      meets += Rational(bl.s[i]) * model.points[i].alpha;
    const Rational b2 = bl.beta * bl.beta;
    total += Rational(bl.orbit_size) *
             (Rational(2 * bl.blown_points - 2) * b2 * bl.beta -
              Rational(3) * b2 * meets);
  }
  return total;
}

Rational chi_orb(const refdata::GroupData& data, const std::vector<long>& weights) {
  const weights::WeightCheck wc = weights::check(data, weights);
  if (wc.holonomy != weights::Holonomy::kHyperbolic)
    throw VolumeError(data.id + ": the assignment is " +
                      weights::holonomy_name(wc.holonomy) +
                      "; the Euler number needs a hyperbolic one");
  if (!wc.admissible) {
    std::string what = data.id + ": assignment fails the stratum conditions at";
    for (const std::string& label : wc.failures) what += " " + label;
    throw VolumeError(what);
  }
  const Rational c = cube(build_blowup_model(data, weights));
  return -c / Rational(16 * (data.order / data.center_order));
}

std::string ball_volume_str(const Rational& chi) {
  const double pi = std::acos(-1.0);
  const double v = 8.0 * pi * pi * pi / 3.0 * std::fabs(chi.to_double());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace ballq::volume
