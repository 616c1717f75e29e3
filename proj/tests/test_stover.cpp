#include <set>

#include "doctest.h"
#include "mapalg/errors.hpp"
#include "mapalg/stover.hpp"

using namespace mapalg;

namespace {

// f : B -> Y as an element of level 0, i.e. a map B ⋊ Delta[0] -> Y.
Index level0_index(const MappingSpace& m, const SimplicialMap& f) {
  const ProductQuotient& pq = m.source->level(0);
  SimplicialMap g{pq.space, m.ez_target->set, {}};
  for (const auto& [a, b] : pq.coords) g.image.push_back(f.apply(a));
  return m.index_of(0, g);
}

int count_kind(const StoverObject& s, PieceKind kind) {
  int n = 0;
  for (const StoverPiece& p : s.pieces) n += p.kind == kind;
  return n;
}

bool same_presentation(const StoverObject& x, const StoverObject& y) {
  if (x.pieces != y.pieces || x.built.tags != y.built.tags) return false;
  const SimplicialSet &p = *x.space(), &q = *y.space();
  if (p.size() != q.size() || p.basepoint() != q.basepoint()) return false;
  for (CellId c = 0; c < p.size(); ++c) {
    if (p.cell(c).dim != q.cell(c).dim || p.cell(c).faces != q.cell(c).faces) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("elementary Stover objects") {
  SUBCASE("into a point") {
    // Into a point there is exactly one map from anything.
    auto e = elementary_stover(sphere(1), point(), 0);
    CHECK(e.maps.size() == 1);
    REQUIRE(e.homotopies.size() == 1);
    CHECK(e.homotopies.begin()->second.size() == 1);
    CHECK(validate(*e.object.space()).empty());
    CHECK(is_valid(*e.object.counit));
  }
  SUBCASE("S0 into S0 at the identity class") {
    auto s0 = sphere(0);
    auto probe = elementary_stover(s0, s0, 0);
    const Index id = level0_index(*probe.object.spaces[0], identity_map(s0));
    const int phi = probe.object.classes[0].class_of[id];
    auto e = elementary_stover(s0, s0, phi);
    CHECK(e.maps == std::vector<Index>{id});
    // S0 ⋊ Delta[1] is a point plus an edge; into a discrete S0 the edge is
    // constant, so the only homotopy from id to id is the degenerate one.
    REQUIRE(e.homotopies.size() == 1);
    CHECK(e.homotopies.begin()->first == std::pair{id, id});
    CHECK(e.homotopies.begin()->second.size() == 1);
    CHECK(count_kind(e.object, PieceKind::copy) == 1);
    CHECK(count_kind(e.object, PieceKind::cylinder) == 1);
    CHECK(validate(*e.object.space()).empty());
  }
  CHECK_THROWS_AS(elementary_stover(sphere(0), sphere(0), 2), StructuralError);
  CHECK_THROWS_AS(elementary_stover(sphere(0), sphere(0), -1), StructuralError);
}

TEST_CASE("Stover comonad objects") {
  SUBCASE("A = S1 into a point") {
    auto ly = stover_comonad(sphere(1), point(), 0);
    CHECK(validate(*ly.space()).empty());
    CHECK(is_valid(*ly.counit));
    CHECK(ly.pieces.size() == 2);
    // One copy of S1 with edge e, one cylinder S1 ⋊ Delta[1] whose ends are
    // both glued to e: what remains is the diagonal edge and two triangles.
    CHECK(ly.space()->count(0) == 1);
    CHECK(ly.space()->count(1) == 2);
    CHECK(ly.space()->count(2) == 2);
    for (CellId c = 0; c < ly.space()->size(); ++c) CHECK_FALSE(ly.built.tags[c].empty());
  }
  SUBCASE("A = S0, Y = S0") {
    auto ly = stover_comonad(sphere(0), sphere(0), 0);
    std::set<int> classes;
    for (const StoverPiece& p : ly.pieces) classes.insert(p.cls);
    CHECK(classes == std::set<int>{0, 1});
    CHECK(validate(*ly.space()).empty());
    CHECK(is_valid(*ly.counit));
    // Basepoint plus one vertex per level-0 map; each vertex carries the loop
    // of its degenerate self-homotopy.
    CHECK(ly.space()->count(0) == 3);
    CHECK(ly.space()->count(1) == 2);
  }
  SUBCASE("A = S1, Y = S1") {
    auto ly = stover_comonad(sphere(1), sphere(1), 0);
    CHECK(ly.classes[0].count() == 2);
    std::set<int> classes;
    for (const StoverPiece& p : ly.pieces) classes.insert(p.cls);
    CHECK(classes.size() == 2);
    CHECK(validate(*ly.space()).empty());
    CHECK(is_valid(*ly.counit));
  }
}

TEST_CASE("cylinder ends meet the copies of their faces") {
  auto ly = stover_comonad(sphere(1), sphere(1), 0);
  const auto& t = ly.truncations[0];
  for (int p = 0; p < static_cast<int>(ly.pieces.size()); ++p) {
    const StoverPiece& piece = ly.pieces[p];
    if (piece.kind != PieceKind::cylinder) continue;
    const SourceFamily& src = *ly.sources[0];
    for (int end = 0; end <= 1; ++end) {
      const Index face = end == 0 ? t.d0[piece.element] : t.d1[piece.element];
      const int q = ly.piece_index(0, PieceKind::copy, face);
      REQUIRE(q >= 0);
      CHECK(compose(ly.built.legs[p], src.coface(1, end)) == ly.built.legs[q]);
    }
  }
}

TEST_CASE("counit restricts to the indexing maps") {
  for (auto [a, y] : {std::pair{sphere(0), sphere(0)}, std::pair{sphere(1), sphere(1)}, std::pair{sphere(1), point()}}) {
    auto ly = stover_comonad(a, y, 0);
    for (int p = 0; p < static_cast<int>(ly.pieces.size()); ++p) {
      CHECK(compose(*ly.counit, ly.built.legs[p]) == ly.piece_map(p));
    }
  }
}

TEST_CASE("comonad laws") {
  for (auto [a, y] : {std::pair{sphere(0), sphere(0)}, std::pair{sphere(1), point()}, std::pair{sphere(0), point()}}) {
    auto report = check_comonad_laws(a, y, 0, true);
    REQUIRE(report.checks.size() == 3);
    for (const LawCheck& c : report.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
  auto report = check_comonad_laws(sphere(1), sphere(1), 0, false);
  CHECK(report.pass());
}

TEST_CASE("a corrupted comultiplication is caught") {
  auto ly = stover_comonad(sphere(0), sphere(0), 0);
  auto lly = stover_comonad(ly, ly.space());
  SimplicialMap mu = comultiplication(ly, lly);
  CHECK(compare_on_cells("counit_left", compose(*lly.counit, mu), identity_map(ly.space()), &ly).pass);
  // Send a non-base vertex of L_A Y to the basepoint.
  CellId v = 0;
  while (v == ly.space()->basepoint()) ++v;
  mu.image[v] = nondegenerate(lly.space()->basepoint(), 0);
  auto check = compare_on_cells("counit_left", compose(*lly.counit, mu), identity_map(ly.space()), &ly);
  CHECK_FALSE(check.pass);
  CHECK(check.witness.find("cell " + std::to_string(v)) == 0);
}

TEST_CASE("functoriality") {
  auto s1 = sphere(1);
  auto w = wedge({s1, s1});
  CHECK(check_functoriality(s1, w.legs[1], 0).pass);
  CHECK(check_functoriality(sphere(0), constant_map(sphere(0), sphere(0)), 0).pass);
  CHECK(check_functoriality(sphere(0), w.legs[0], 0).pass);
}

TEST_CASE("the construction sees only truncated data") {
  auto s0 = sphere(0);
  auto ly = stover_comonad(s0, sphere(1), 1);
  CHECK(same_presentation(ly, stover_from_truncation(s0, ly.sources, ly.truncations)));
  CHECK(same_presentation(ly, stover_from_truncation(s0, ly.truncations)));
  // S1 and S1 v S2 agree through dimension 1, hence so do their S0-mapping
  // spaces at levels 0 and 1.
  auto other = stover_comonad(s0, wedge({sphere(1), sphere(2)}).space, 0);
  CHECK(same_presentation(stover_comonad(s0, sphere(1), 0), other));
}

TEST_CASE("cone construction for cogroup objects") {
  CHECK_THROWS_AS(stover_cogroup_variant(sphere(0), sphere(0), 0, true), StructuralError);
  CHECK_THROWS_AS(stover_cogroup_variant(sphere(1), sphere(1), 0, false), StructuralError);
  SUBCASE("A = S1, Y = S1") {
    auto s = stover_cogroup_variant(sphere(1), sphere(1), 0, true);
    CHECK(validate(*s.space()).empty());
    CHECK(is_valid(*s.counit));
    const auto& space = *s.spaces[0];
    const Index zero = space.table.basepoint(0);
    const Index id = level0_index(space, identity_map(sphere(1)));
    // Only the identity survives as a copy; the zero copy is the basepoint.
    CHECK(count_kind(s, PieceKind::copy) == 1);
    CHECK(s.piece_index(0, PieceKind::copy, id) >= 0);
    CHECK(s.piece_index(0, PieceKind::copy, zero) < 0);
    // The identity has degree one, so nothing contracts it.
    for (const StoverPiece& p : s.pieces) {
      if (p.kind != PieceKind::cone) continue;
      CHECK(s.truncations[0].d0[p.element] == zero);
      CHECK(s.truncations[0].d1[p.element] == zero);
    }
    CHECK(count_kind(s, PieceKind::cone) >= 1);
    for (int p = 1; p < static_cast<int>(s.pieces.size()); ++p) {
      CHECK(compose(*s.counit, s.built.legs[p]) == s.piece_map(p));
    }
  }
  SUBCASE("into a point") {
    auto s = stover_cogroup_variant(sphere(1), point(), 0, true);
    CHECK(count_kind(s, PieceKind::copy) == 0);
    CHECK(count_kind(s, PieceKind::cone) == 1);
    CHECK(validate(*s.space()).empty());
    CHECK(is_valid(*s.counit));
  }
}

TEST_CASE("counit resolution") {
  for (auto [a, y] : {std::pair{sphere(1), sphere(1)}, std::pair{sphere(0), sphere(0)}, std::pair{sphere(1), point()}}) {
    auto ly = stover_comonad(a, y, 1);
    auto r = check_counit_resolution(ly);
    CHECK(r.copies);
    CHECK(r.cylinders);
    REQUIRE(r.degrees.size() == 2);
    for (const auto& d : r.degrees) {
      CHECK(d.surjective);
      CHECK(static_cast<int>(d.lifts.size()) == d.target_classes);
      CHECK(d.source_classes >= d.target_classes);
    }
  }
  // A three-point discrete target: every vertex is its own class.
  auto three = wedge({sphere(0), sphere(0)}).space;
  auto r = check_counit_resolution(stover_comonad(sphere(0), three, 0));
  CHECK(r.pass());
  CHECK(r.degrees[0].target_classes == 3);
}
