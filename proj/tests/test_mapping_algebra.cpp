#include <numeric>

#include "doctest.h"
#include "mapalg/errors.hpp"
#include "mapalg/mapping_algebra.hpp"

using namespace mapalg;

TEST_CASE("formal object grammar") {
  auto b = FormalObject::parse("wedge(susp(A,1), A)");
  CHECK(b.key() == "wedge(A,susp(A,1))");
  CHECK(FormalObject::parse(b.key()) == b);
  CHECK(FormalObject::parse("susp(wedge(A,susp(A,1)),1)").key() == "wedge(susp(A,1),susp(A,2))");
  CHECK(FormalObject::parse("A") == FormalObject::generator());
  CHECK(FormalObject::parse("wedge()").empty());
  CHECK_THROWS_AS(FormalObject::parse("susp(A)"), ParseError);
  CHECK_THROWS_AS(FormalObject::parse("B"), ParseError);
  CHECK_THROWS_AS(FormalObject::parse("wedge(A,"), ParseError);
}

TEST_CASE("realization is cached and deterministic") {
  auto s1 = sphere(1);
  auto b = FormalObject::parse("wedge(A,susp(A,1))");
  auto r1 = realize(s1, b);
  auto r2 = realize(s1, FormalObject::parse("wedge(susp(A,1),A)"));
  CHECK(r1 == r2);
  CHECK(validate(*r1->space).empty());
  CHECK(r1->space->count(1) == 1 + 1);  // S^1 plus the edge of ΣS^1
}

TEST_CASE("evaluation rules") {
  auto alg = RealizableAlgebra(sphere(1), sphere(1), 1, 1);
  const auto& x = alg.discrete();
  auto a = x.evaluate(FormalObject::generator(), 1);
  for (int n = 0; n <= 1; ++n) CHECK(a->size(n) == alg.base().table.size(n));
  auto aa = x.evaluate(FormalObject::parse("wedge(A,A)"), 1);
  for (int n = 0; n <= 1; ++n) CHECK(aa->size(n) == a->size(n) * a->size(n));
  CHECK(check_identities(*aa).empty());
  CHECK(x.evaluate(FormalObject::generator(), 1) == a);  // memoized
}

TEST_CASE("evaluation agrees with direct mapping spaces") {
  struct Case {
    SetPtr a, y;
    const char* b;
    int i_max;
  };
  const std::vector<Case> cases = {
      {sphere(0), sphere(1), "susp(A,1)", 1},
      {sphere(1), sphere(1), "A", 1},
      {sphere(1), sphere(1), "wedge(A,A)", 1},
      {sphere(1), sphere(1), "susp(A,1)", 1},
      {sphere(1), sphere(2), "wedge(A,susp(A,1))", 1},
      {sphere(0), sphere(2), "susp(A,2)", 2},
      {sphere(0), sphere(1), "wedge(A,susp(A,1),susp(A,2))", 2},
      {sphere(1), point(), "wedge(A,susp(A,1))", 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.b);
    RealizableAlgebra alg(c.a, c.y, 1, c.i_max);
    auto cmp = alg.compare(FormalObject::parse(c.b));
    CHECK(cmp.bijective());
    CHECK(check_level_map(cmp.direct->table, *cmp.evaluated, cmp.map).empty());
  }
  // Loops of S^1 at the basepoint against the direct enumeration.
  RealizableAlgebra alg(sphere(0), sphere(1), 1, 1);
  auto looped = alg.discrete().evaluate(FormalObject::parse("susp(A,1)"), 1);
  auto direct = mapping_space(suspension(sphere(0), 1), sphere(1), 1);
  CHECK(looped->size(0) == direct.table.size(0));
  CHECK(looped->size(1) == direct.table.size(1));
}

TEST_CASE("evaluation depends only on the base up to relabeling") {
  RealizableAlgebra alg(sphere(1), sphere(1), 1, 1);
  const SimplexTable& base = alg.base().table;
  std::vector<std::vector<Index>> perm;
  for (int n = 0; n <= base.top(); ++n) {
    std::vector<Index> p(base.size(n));
    std::iota(p.rbegin(), p.rend(), 0);
    perm.push_back(p);
  }
  auto shuffled = std::make_shared<const SimplexTable>(relabel(base, perm));
  CHECK(check_identities(*shuffled).empty());
  DiscreteMappingAlgebra other(shuffled);
  for (const char* text : {"A", "susp(A,1)", "wedge(A,susp(A,1))"}) {
    auto b = FormalObject::parse(text);
    auto v1 = alg.discrete().evaluate(b, 1);
    auto v2 = other.evaluate(b, 1);
    for (int n = 0; n <= 1; ++n) CHECK(v1->size(n) == v2->size(n));
    CHECK(homotopy_classes(*v1).count() == homotopy_classes(*v2).count());
  }
  // The relabeling induces an explicit isomorphism of loop objects.
  const LevelMap p{perm};
  const LevelMap induced = postcompose(*alg.discrete().loops(1), *other.loops(1), p);
  CHECK(check_level_map(alg.discrete().loops(1)->table, other.loops(1)->table, induced).empty());
  for (int n = 0; n < static_cast<int>(induced.at.size()); ++n) {
    CHECK(compare_levels(induced, alg.discrete().loops(1)->table, other.loops(1)->table, n).bijective());
  }
}

TEST_CASE("Yoneda bijection") {
  auto r = yoneda_check(sphere(0), FormalObject::generator(), sphere(0));
  CHECK(r.elements == sphere(0)->count(0));
  CHECK(r.transformations == r.elements);
  CHECK(r.bijective);
  auto s1 = yoneda_check(sphere(1), FormalObject::generator(), sphere(1));
  CHECK(s1.elements == 2);
  CHECK(s1.bijective);
  auto pt = yoneda_check(sphere(1), FormalObject::parse("wedge(A,susp(A,1))"), point());
  CHECK(pt.elements == 1);
  CHECK(pt.bijective);
  auto w = yoneda_check(sphere(0), FormalObject::parse("wedge(A,A)"), sphere(1));
  CHECK(w.bijective);
}

TEST_CASE("A-equivalence diagnostics") {
  auto s1 = sphere(1);
  auto id = a_equivalence_check(identity_map(s1), sphere(1), 1, 1);
  CHECK(id.positive());
  CHECK(id.verdict() == "A-equivalence up to (1, 1)");
  auto incl = a_equivalence_check(constant_map(point(), s1), sphere(0), 1, 1);
  REQUIRE(incl.degrees.size() == 2);
  CHECK(incl.degrees[0].source_classes == 1);
  CHECK(incl.degrees[0].target_classes == 1);
  CHECK(incl.degrees[1].target_classes == 2);
  CHECK_FALSE(incl.positive());
  auto w = wedge({s1, sphere(2)});
  auto leg = a_equivalence_check(w.legs[0], sphere(1), 0, 1);
  CHECK(leg.degrees[0].injective);
}
