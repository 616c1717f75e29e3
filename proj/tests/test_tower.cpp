#include "doctest.h"
#include "mapalg/errors.hpp"
#include "mapalg/tower.hpp"

using namespace mapalg;

namespace {

void check_stage(const TowerStage& s) {
  for (const LawCheck& c : s.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.pass);
  }
}

// S0 -> Delta[1] hitting both vertices; two classes over a contractible target.
SimplicialMap two_ends() {
  auto s0 = sphere(0), d1 = standard_simplex(1);
  SimplicialMap e{s0, d1, {}};
  for (CellId c = 0; c < s0->size(); ++c) {
    e.image.push_back(nondegenerate(c == s0->basepoint() ? d1->basepoint() : 1 - d1->basepoint(), 0));
  }
  return e;
}

}  // namespace

TEST_CASE("mapping cylinder pushout") {
  auto s1 = sphere(1);
  auto w = wedge({s1, s1});
  auto cp = cylinder_pushout(constant_map(s1, point()), w.legs[0]);
  CHECK(validate(*cp.w.space).empty());
  CHECK(compose(cp.collapse, cp.back) == identity_map(w.space));
  CHECK(compose(cp.collapse, cp.front) == w.legs[0]);
  CHECK(injective_on_cells(cp.i()));
  CHECK(is_valid(cp.p()));
  // Coning off one circle of S1 v S1: the cylinder S1 ⋊ Delta[1] adds one
  // front edge, one diagonal and two triangles, and the front edge is
  // collapsed to the point.
  CHECK(cp.z.space->count(1) == 3);
  CHECK(cp.z.space->count(2) == 2);
}

TEST_CASE("Dold-Lashof tower recovers S0-mapping spaces in one step") {
  for (SetPtr y : {sphere(1), wedge({sphere(1), sphere(1)}).space}) {
    auto s = run_tower(TowerKind::dold_lashof, sphere(0), y, 1, 1, 0);
    REQUIRE(s.stages.size() == 2);
    check_stage(s.stages[1]);
    auto r = recovery_report(s);
    for (const LevelReport& l : r.levels) {
      CHECK(l.injective);
      CHECK(l.surjective);
    }
    CHECK(r.degrees[0].surjective);
    CHECK(r.degrees[0].injective);
  }
}

TEST_CASE("tower identities through two stages") {
  for (TowerKind kind : {TowerKind::dold_lashof, TowerKind::stover}) {
    INFO(to_string(kind));
    auto s = run_tower(kind, sphere(1), sphere(1), 2, 1, 0);
    REQUIRE(s.stages.size() == 3);
    for (int k = 1; k <= 2; ++k) {
      const TowerStage& st = s.stages[k];
      check_stage(st);
      CHECK(st.checks.size() == (kind == TowerKind::stover ? 6 : 5));
      CHECK(validate(*st.z).empty());
    }
    auto r = recovery_report(s);
    REQUIRE(r.degrees.size() == 1);
    const auto& d = r.degrees[0];
    CHECK(d.target_classes == 2);  // the constant map and the identity
    CHECK(d.stage_classes == 2);
    CHECK(d.surjective);
    CHECK(d.injective);
    CHECK(d.stabilized);
    CHECK(static_cast<int>(d.lifts.size()) == d.target_classes);
    for (const LevelReport& l : r.levels) CHECK(l.surjective);
  }
}

TEST_CASE("towers over a point") {
  // Every stage of the Dold-Lashof tower is a point; the Stover stages grow
  // but stay connected.
  for (TowerKind kind : {TowerKind::dold_lashof, TowerKind::stover}) {
    auto s = run_tower(kind, sphere(1), point(), 2, 1, 0);
    for (const TowerStage& st : s.stages) {
      check_stage(st);
      if (kind == TowerKind::dold_lashof) CHECK(st.z->size() == 1);
    }
    auto r = recovery_report(s);
    CHECK(r.degrees[0].stage_classes == 1);
    CHECK(r.degrees[0].stabilized);
    CHECK(r.levels[0].surjective);
    CHECK(r.levels[0].injective == (kind == TowerKind::dold_lashof));
  }
}

TEST_CASE("merged classes come with connecting chains") {
  for (TowerKind kind : {TowerKind::dold_lashof, TowerKind::stover}) {
    INFO(to_string(kind));
    auto s = tower_step(start_tower(kind, sphere(0), two_ends(), 1, 0));
    check_stage(s.stages[1]);
    auto r = recovery_report(s);
    // The two classes of Z0 = S0 meet in Z1.
    CHECK_FALSE(r.degrees[0].stabilized);
    CHECK(r.degrees[0].stage_classes == 1);
    REQUIRE(r.witnesses.size() == 1);
    const InjectivityWitness& w = r.witnesses[0];
    CHECK(w.stage == 0);
    CHECK(w.g != w.g2);
    CHECK(w.sigma.size() == 1);
    CHECK(w.chain.size() == w.sigma.size() + 2);
    CHECK(w.verified);
  }
}

TEST_CASE("tower preconditions") {
  CHECK_THROWS_AS(start_tower(TowerKind::dold_lashof, sphere(0), sphere(1), 0, 0), CapError);
  auto s = start_tower(TowerKind::stover, sphere(0), sphere(1), 1, 0);
  CHECK_THROWS_AS(dold_lashof_step(s), StructuralError);
}
