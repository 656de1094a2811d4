#include "ballq/volume.hpp"

#include <map>
#include <string>
#include <vector>

#include "doctest.h"

using namespace ballq;
using exact::Rational;
using volume::BlownLine;
using volume::BlownPoint;
using volume::BlowupModel;

namespace {

Rational frac(long num, long den) { return Rational(num) / Rational(den); }

const BlownPoint& point(const BlowupModel& m, const std::string& label) {
  for (const auto& p : m.points)
    if (p.label == label) return p;
  REQUIRE(false);
  static BlownPoint unreachable;
  return unreachable;
}

const BlownLine& line(const BlowupModel& m, const std::string& label) {
  for (const auto& l : m.lines)
    if (l.label == label) return l;
  REQUIRE(false);
  static BlownLine unreachable;
  return unreachable;
}

}  // namespace

TEST_CASE("a model without blow-ups reduces to the hyperplane class") {
  // Every stratum stays below the blow-up threshold, so the cube is just
  // lambda^3 and the Euler number follows directly.
  const auto& b4 = refdata::group("B4");
  const auto model = volume::build_blowup_model(b4, {3, 3});
  CHECK(model.points.empty());
  CHECK(model.lines.empty());
  CHECK(model.lambda == frac(4, 3));
  CHECK(volume::cube(model) == model.lambda * model.lambda * model.lambda);
  CHECK(volume::chi_orb(b4, {3, 3}) == frac(-1, 1296));
}

TEST_CASE("a cusped assignment keeps its parabolic line out of the model") {
  // The deep point is blown but the line through it sits exactly at the
  // threshold, so only one exceptional divisor appears.
  const auto& a4 = refdata::group("A4");
  const auto model = volume::build_blowup_model(a4, {6});
  CHECK(model.lambda == frac(8, 3));
  REQUIRE(model.points.size() == 1);
  CHECK(model.lines.empty());
  const auto& bp = point(model, "L_123");
  CHECK(bp.orbit_size == 5);
  CHECK(bp.kappa == frac(4, 3));
  CHECK(bp.delta == frac(2, 3));
  CHECK(bp.alpha == frac(-4, 3));
  CHECK(volume::cube(model) == frac(64, 9));
  CHECK(volume::chi_orb(a4, {6}) == frac(-1, 270));
}

TEST_CASE("exceptional multiplicities of a fully blown model") {
  const auto& a4 = refdata::group("A4");
  const auto model = volume::build_blowup_model(a4, {8});
  CHECK(model.lambda == frac(7, 2));

  REQUIRE(model.points.size() == 1);
  const auto& bp = point(model, "L_123");
  CHECK(bp.kappa == frac(3, 2));
  CHECK(bp.alpha == Rational(-2));

  REQUIRE(model.lines.size() == 1);
  const auto& bl = line(model, "L_12");
  CHECK(bl.orbit_size == 10);
  CHECK(bl.kappa == frac(9, 8));
  // One line meets its orbit of deep points twice and one shallow
  // (reducible) point once; the shallow point contributes one extra mirror.
  CHECK(bl.blown_points == 2);
  CHECK(bl.s == std::vector<long>{2});
  CHECK(bl.t == std::vector<long>{1});
  CHECK(bl.mirrors == std::vector<long>{3});
  CHECK(bl.beta == frac(-1, 2));

  CHECK(volume::cube(model) == frac(33, 8));
  CHECK(volume::chi_orb(a4, {8}) == frac(-11, 5120));
}

TEST_CASE("the largest group's model at its cocompact assignment") {
  const auto& g31 = refdata::group("G31");
  const auto model = volume::build_blowup_model(g31, {5});
  CHECK(model.lambda == Rational(32));
  CHECK(point(model, "L_125").alpha == Rational(-8));
  CHECK(point(model, "L_235").alpha == frac(-4, 5));

  REQUIRE(model.lines.size() == 1);
  const auto& bl = line(model, "L_14");
  // All six incident deep points lie in a single orbit; nothing shallow.
  CHECK(bl.blown_points == 6);
  CHECK(bl.t == std::vector<long>{0});
  CHECK(bl.beta == frac(-16, 5));

  CHECK(volume::cube(model) == frac(167936, 25));
  CHECK(volume::chi_orb(g31, {5}) == frac(-41, 1125));
}

TEST_CASE("orbifold Euler numbers match the curated tables everywhere") {
  for (const std::string& id : refdata::group_ids()) {
    CAPTURE(id);
    const auto& data = refdata::group(id);
    std::map<std::vector<long>, Rational> computed;
    for (const auto& row : data.invariants)
      computed.emplace(row.weights, volume::chi_orb(data, row.weights));
    const auto diffs = refdata::diff(computed, data);
    for (const auto& d : diffs) CAPTURE(d.str());
    CHECK(diffs.empty());
  }
}

TEST_CASE("spot values of the Euler number") {
  CHECK(volume::chi_orb(refdata::group("A4"), {4}) == frac(-1, 1920));
  CHECK(volume::chi_orb(refdata::group("A4"), {5}) == frac(-17, 6000));
  CHECK(volume::chi_orb(refdata::group("B4"), {3, 6}) == frac(-1, 54));
  CHECK(volume::chi_orb(refdata::group("G29"), {3}) == frac(-323, 12960));
  CHECK(volume::chi_orb(refdata::group("G29"), {4}) == frac(-13, 160));
  CHECK(volume::chi_orb(refdata::group("G30"), {3}) == frac(-52, 2025));
  CHECK(volume::chi_orb(refdata::group("G30"), {5}) == frac(-41, 1125));
}

TEST_CASE("swapping the weight classes of the symmetric group is invisible") {
  // The diagram automorphism exchanging the two mirror classes forces the
  // Euler number to be symmetric in the two weights.
  const auto& g28 = refdata::group("G28");
  for (const auto& row : g28.invariants) {
    REQUIRE(row.weights.size() == 2);
    const std::vector<long> swapped = {row.weights[1], row.weights[0]};
    CHECK(volume::chi_orb(g28, swapped) == row.chi);
  }
}

TEST_CASE("non-hyperbolic assignments are refused with their type") {
  CHECK_THROWS_WITH_AS(volume::chi_orb(refdata::group("A4"), {3}),
                       doctest::Contains("finite"), volume::VolumeError);
  CHECK_THROWS_WITH_AS(volume::build_blowup_model(refdata::group("A4"), {3}),
                       doctest::Contains("finite"), volume::VolumeError);
  CHECK_THROWS_WITH_AS(volume::chi_orb(refdata::group("B4"), {2, 3}),
                       doctest::Contains("parabolic"), volume::VolumeError);
}

TEST_CASE("failing assignments are refused but still model-buildable") {
  // Integrality failures block the Euler number, not the geometry: the
  // model itself only needs hyperbolicity.
  const auto& a4 = refdata::group("A4");
  CHECK_THROWS_WITH_AS(volume::chi_orb(a4, {7}), doctest::Contains("L_123"),
                       volume::VolumeError);
  CHECK_NOTHROW(volume::build_blowup_model(a4, {7}));

  const auto& b4 = refdata::group("B4");
  CHECK_THROWS_WITH_AS(volume::chi_orb(b4, {5, 5}), doctest::Contains("L_123"),
                       volume::VolumeError);
}

TEST_CASE("volume strings are twelve significant digits") {
  CHECK(volume::ball_volume_str(Rational(-1)) == "82.6834044808");
  CHECK(volume::ball_volume_str(frac(-11, 5120)) == "0.177640126814");
  CHECK(volume::ball_volume_str(frac(-17, 6000)) == "0.234269646029");
  // Display takes the magnitude; the sign convention lives upstream.
  CHECK(volume::ball_volume_str(frac(11, 5120)) == "0.177640126814");
}
