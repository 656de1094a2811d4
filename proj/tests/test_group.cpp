#include "ballq/group.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.h"

using namespace ballq;
using exact::Cyclotomic;
using exact::ExactMatrix;
using exact::Rational;

namespace {

/// One structural sweep per group: the enumeration must reproduce every
/// curated header number and relation.
void check_group(const std::string& id) {
  const group::BuiltGroup& g = built(id);
  const auto problems = group::validate_group(g);
  for (const auto& p : problems) {
    CAPTURE(p);
    CHECK(false);
  }
  CHECK(problems.empty());
  CHECK(g.order() == g.data().order);
  CHECK(g.center_order() == g.data().center_order);
  CHECK(static_cast<long>(g.mirrors().size()) == g.data().mirror_count);
  CHECK(g.reflections().size() == g.mirrors().size());
}

}  // namespace

TEST_CASE("A4 enumerates and validates") { check_group("A4"); }
TEST_CASE("B4 enumerates and validates") { check_group("B4"); }
TEST_CASE("G28 enumerates and validates") { check_group("G28"); }
TEST_CASE("G29 enumerates and validates") { check_group("G29"); }
TEST_CASE("G30 enumerates and validates") { check_group("G30"); }
TEST_CASE("G31 enumerates and validates") { check_group("G31"); }

TEST_CASE("reflection matrices are unitary involutions fixing a hyperplane") {
  for (const std::string& id : refdata::group_ids()) {
    const group::BuiltGroup& g = built(id);
    const ExactMatrix identity = ExactMatrix::identity(4);
    for (const ExactMatrix& gen : g.generators()) {
      CHECK(gen.conjugate_transpose() * gen == identity);
      CHECK((gen * gen).is_identity());
      CHECK(exact::rank(gen - identity) == 1);
    }
  }
}

TEST_CASE("group closure is closed under products and inverses") {
  // Spot products: for a sample of elements x, y the products xy and x^-1
  // stay inside; the dedup key must recognize them no matter how their
  // entries' conductors came out.
  for (const std::string& id : {"A4", "B4"}) {
    const group::BuiltGroup& g = built(id);
    const auto& e = g.elements();
    for (size_t i = 0; i < e.size(); i += 17)
      for (size_t j = 0; j < e.size(); j += 29) {
        CHECK(g.contains(e[i] * e[j]));
        CHECK(g.contains(e[i].conjugate_transpose()));
      }
  }
}

TEST_CASE("matrices outside the group are not contained") {
  const group::BuiltGroup& g = built("A4");
  ExactMatrix two = ExactMatrix::identity(4);
  two.at(0, 0) = Rational(2);
  CHECK_FALSE(g.contains(two));
}

TEST_CASE("equal matrices key equal across mixed entry conductors") {
  // Regression: a product whose zeros are carried at the field conductor
  // must key identically to the plain rational identity.
  const group::BuiltGroup& g = built("A4");
  const ExactMatrix r = g.generators()[0];
  const ExactMatrix product_identity = r * r;
  const ExactMatrix identity = ExactMatrix::identity(4);
  CHECK(product_identity == identity);
  CHECK(product_identity.key(g.conductor()) == identity.key(g.conductor()));
  CHECK(g.contains(product_identity));
}

TEST_CASE("mirror lookup by canonical normal") {
  const group::BuiltGroup& g = built("B4");
  for (const auto& root : g.data().roots)
    CHECK(g.mirror_index(g.normal_key(root)) >= 0);
  const std::vector<Cyclotomic> off = {Cyclotomic(Rational(1)), Cyclotomic(Rational(7)),
                                       Cyclotomic(Rational(0)), Cyclotomic(Rational(0))};
  CHECK(g.mirror_index(g.normal_key(off)) == -1);
}

TEST_CASE("mirror orbits partition the mirrors with curated sizes") {
  for (const std::string& id : refdata::group_ids()) {
    const group::BuiltGroup& g = built(id);
    CAPTURE(id);
    size_t covered = 0;
    for (size_t i = 0; i < g.mirror_orbits().size(); ++i) {
      const auto& orbit = g.mirror_orbits()[i];
      covered += orbit.mirrors.size();
      CHECK(orbit.label == g.data().mirror_orbits[i].label);
      CHECK(static_cast<long>(orbit.mirrors.size()) == g.data().mirror_orbits[i].size);
      for (size_t m : orbit.mirrors)
        CHECK(g.mirrors()[m].orbit == static_cast<int>(i));
    }
    CHECK(covered == g.mirrors().size());
  }
}

TEST_CASE("word evaluation honors inverses") {
  const group::BuiltGroup& g = built("G29");
  // r3 r4 r3^-1 equals the conjugate of r4, hence is itself a reflection.
  const ExactMatrix w = g.word_matrix({3, 4, -3});
  CHECK(exact::rank(w - ExactMatrix::identity(4)) == 1);
  CHECK(g.contains(w));
  CHECK(g.word_matrix({1, -1}).is_identity());
}

TEST_CASE("matrix order finds curated word orders") {
  const group::BuiltGroup& a4 = built("A4");
  CHECK(group::matrix_order(a4.word_matrix({1, 2, 3})) == 4);
  const group::BuiltGroup& g31 = built("G31");
  CHECK(group::matrix_order(g31.word_matrix({5, 2, 1})) == 8);
  CHECK(group::matrix_order(g31.word_matrix({2, 3, 5})) == 4);
}

TEST_CASE("matrix order respects its bound") {
  const group::BuiltGroup& g = built("A4");
  const ExactMatrix m = g.word_matrix({1, 2});
  CHECK(group::matrix_order(m) == 3);
  CHECK_THROWS_AS(group::matrix_order(m, 2), group::GroupError);
}

TEST_CASE("closure budget overruns throw") {
  CHECK_THROWS_AS(group::build_group("B4", 50), group::GroupError);
}

TEST_CASE("reflection_normal rejects non-reflections") {
  const group::BuiltGroup& g = built("A4");
  CHECK_THROWS_AS(group::reflection_normal(ExactMatrix::identity(4)),
                  group::GroupError);
  // A product of two non-commuting reflections is a rotation (rank 2).
  CHECK_THROWS_AS(group::reflection_normal(g.word_matrix({1, 2})),
                  group::GroupError);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(group::canonical_normal(std::vector<Cyclotomic>(4)),
                  group::GroupError);
  CHECK_THROWS_AS(group::reflection_matrix(std::vector<Cyclotomic>(4)),
                  group::GroupError);
  CHECK_THROWS_AS(built("A4").word_matrix({9}), group::GroupError);
}

TEST_CASE("center elements are the scalar matrices") {
  for (const std::string& id : {"B4", "G29"}) {
    const group::BuiltGroup& g = built(id);
    CAPTURE(id);
    long scalars = 0;
    for (const ExactMatrix& e : g.elements()) {
      if (!e.is_scalar()) continue;
      ++scalars;
      // A scalar unitary of finite order is a root of unity times identity;
      // it must commute with the generators.
      for (const ExactMatrix& gen : g.generators()) CHECK(e * gen == gen * e);
    }
    CHECK(scalars == g.center_order());
  }
}
