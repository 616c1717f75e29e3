#include "doctest.h"
#include "mapalg/monad.hpp"

using namespace mapalg;

namespace {

// Delta[1] with both endpoints collapsed: one vertex and one loop.
SetPtr circle_quotient() {
  auto d1 = standard_simplex(1);
  const CellId ends[] = {delta_cell(1, 1u), delta_cell(1, 2u)};
  return quotient(d1, ends).space;
}

}  // namespace

TEST_CASE("F_A on small objects") {
  auto s0 = sphere(0), s1 = sphere(1);
  CHECK(isomorphic(left_adjoint_F(s0, s1).space, s1));
  CHECK(isomorphic(left_adjoint_F(s0, boundary(2)).space, boundary(2)));
  CHECK(left_adjoint_F(s1, point()).space->size() == 1);
  CHECK(left_adjoint_F(s0, point()).space->size() == 1);
  CHECK(isomorphic(left_adjoint_F(s1, s0).space, s1));
}

TEST_CASE("adjunction bijection and triangle identities") {
  auto s0 = sphere(0), s1 = sphere(1);
  // |map(A∧K, S1)_0| by hand: A∧K is a point, S0, S1 or S1∧S1, and S1 has
  // no nondegenerate 2-simplex.
  struct Case {
    SetPtr a, k;
    std::size_t maps;
  };
  const Case cases[] = {{s0, point(), 1}, {s0, s0, 1}, {s0, circle_quotient(), 2},
                        {s1, point(), 1}, {s1, s0, 2}, {s1, circle_quotient(), 1}};
  for (const Case& c : cases) {
    auto r = adjunction_check(c.a, c.k, s1);
    INFO("A dim " << c.a->dimension() << ", K size " << c.k->size());
    CHECK(r.left == c.maps);
    CHECK(r.right == c.maps);
    CHECK(r.flat_lands);
    CHECK(r.bijection);
    CHECK(r.sharp_flat);
    CHECK(r.flat_sharp);
    CHECK(r.counit_factor);
    CHECK(r.unit_factor);
    CHECK(r.triangle_f);
    CHECK(r.triangle_m);
    CHECK(r.pass());
  }
}

TEST_CASE("realizable algebras satisfy the algebra axioms") {
  auto s0 = sphere(0), s1 = sphere(1);
  for (auto [a, y] : {std::pair{s0, s1}, std::pair{s1, s1}, std::pair{s1, point()}}) {
    auto s = realizable_algebra_structure(a, y, 1);
    CHECK(is_valid(s.ev));
    for (const AlgebraCheck& c : check_algebra(s, s.eps)) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("unit of the adjunction realizes eta") {
  auto s = realizable_algebra_structure(sphere(1), sphere(1), 1, {}, false);
  for (int n = 0; n <= 1; ++n) {
    for (Index e = 0; e < s.x->table.size(n); ++e) {
      CHECK(s.t->as_map(n, s.eta.at[n][e]) == unit_map(s.t->source->level(n), s.fk, s.k.simplex[n][e]));
    }
  }
}

TEST_CASE("a corrupted structure map fails the unit axiom") {
  auto s = realizable_algebra_structure(sphere(0), sphere(1), 1);
  REQUIRE(s.x->table.size(1) >= 2);
  LevelMap bad = s.eps;
  // Send the unit of the loop to the degenerate loop.
  const Index loop = 1 - s.x->table.basepoint(1);
  bad.at[1][s.eta.at[1][loop]] = s.x->table.basepoint(1);
  auto checks = check_algebra(s, bad);
  CHECK_FALSE(checks[0].pass);
  CHECK(checks[0].witness == "level 1 element " + std::to_string(loop));
  auto without_square = realizable_algebra_structure(sphere(0), sphere(1), 1, {}, false);
  CHECK_FALSE(check_algebra(without_square, without_square.eps)[2].pass);
}
