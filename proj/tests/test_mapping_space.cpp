#include <functional>

#include "doctest.h"
#include "mapalg/errors.hpp"
#include "mapalg/mapping_space.hpp"

using namespace mapalg;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Simplices of S^k in dimension n: the basepoint plus one per surjection [n] -> [k].
long sphere_simplices(int k, int n) { return k == 0 ? 2 : 1 + binom(n, k); }
// Monotone maps [n] -> [p].
long delta_simplices(int p, int n) { return binom(n + p + 1, p); }

// Brute force: try every simplex of the right dimension on every cell and
// keep the assignments that pass map validation.
long brute_force_maps(SetPtr a, SetPtr y) {
  std::vector<std::vector<Simplex>> by_dim;
  for (int n = 0; n <= a->dimension(); ++n) by_dim.push_back(all_simplices(*y, n));
  SimplicialMap f{a, y, std::vector<Simplex>(a->size())};
  long count = 0;
  std::function<void(CellId)> go = [&](CellId c) {
    if (c == a->size()) {
      count += validate(f).empty() ? 1 : 0;
      return;
    }
    for (const Simplex& s : by_dim[a->cell(c).dim]) {
      f.image[c] = s;
      go(c + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST_CASE("pointed maps against brute force") {
  CHECK(enumerate_pointed_maps(sphere(1), sphere(1)).size() == 2);
  CHECK(enumerate_pointed_maps(sphere(1), point()).size() == 1);
  const std::vector<SetPtr> ys = {sphere(1), sphere(2), standard_simplex(2), wedge({sphere(1), sphere(1)}).space,
                                  sphere(0)};
  for (const auto& y : ys) {
    CHECK(static_cast<long>(enumerate_pointed_maps(sphere(0), y).size()) == static_cast<long>(y->count(0)));
    for (const auto& a : {sphere(1), sphere(2), standard_simplex(1), boundary(2)}) {
      const auto maps = enumerate_pointed_maps(a, y);
      CHECK(static_cast<long>(maps.size()) == brute_force_maps(a, y));
      for (const auto& f : maps) CHECK(validate(f).empty());
    }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  auto a = half_smash_right(wedge({sphere(1), sphere(1)}).space, standard_simplex(1)).space;
  auto y = tabulate(wedge({sphere(1), sphere(2), sphere(1)}).space, 2);
  auto serial = enumerate_maps_serial(*a, y.table);
  auto parallel = enumerate_maps_parallel(*a, y.table);
  CHECK(serial.size() == 36);
  CHECK(serial == parallel);
  CHECK(std::is_sorted(serial.begin(), serial.end()));
}

TEST_CASE("budget overflow is explicit and deterministic") {
  auto a = half_smash_right(sphere(1), standard_simplex(1)).space;
  auto y = tabulate(wedge({sphere(1), sphere(1), sphere(1)}).space, 2);
  std::string serial_msg, parallel_msg;
  try {
    enumerate_maps_serial(*a, y.table, 50);
  } catch (const BudgetError& e) {
    serial_msg = e.what();
  }
  try {
    enumerate_maps_parallel(*a, y.table, 50);
  } catch (const BudgetError& e) {
    parallel_msg = e.what();
  }
  CHECK_FALSE(serial_msg.empty());
  CHECK(serial_msg == parallel_msg);
}

TEST_CASE("map(S0, Y) level n has |Y_n| elements") {
  for (int k = 0; k <= 2; ++k) {
    auto ms = mapping_space(sphere(0), sphere(k), 2);
    CHECK(check_identities(ms.table).empty());
    for (int n = 0; n <= 2; ++n) CHECK(static_cast<long>(ms.table.size(n)) == sphere_simplices(k, n));
  }
  auto ms = mapping_space(sphere(0), standard_simplex(2), 2);
  for (int n = 0; n <= 2; ++n) CHECK(static_cast<long>(ms.table.size(n)) == delta_simplices(2, n));
  auto w = mapping_space(sphere(0), wedge({sphere(1), sphere(2)}).space, 2);
  for (int n = 0; n <= 2; ++n) {
    CHECK(static_cast<long>(w.table.size(n)) == sphere_simplices(1, n) + sphere_simplices(2, n) - 1);
  }
}

TEST_CASE("mapping spaces satisfy the simplicial identities") {
  auto ms = mapping_space(sphere(1), sphere(1), 2);
  CHECK(ms.table.size(0) == 2);
  CHECK(check_identities(ms.table).empty());
  auto pt = mapping_space(sphere(1), point(), 1);
  CHECK(pt.table.size(0) == 1);
  CHECK(pt.table.size(1) == 1);
  for (int n = 0; n <= 1; ++n) {
    for (Index k = 0; k < ms.table.size(n); ++k) CHECK(validate(ms.as_map(n, k)).empty());
  }
}

TEST_CASE("postcomposition is natural") {
  auto s1 = sphere(1);
  auto w = wedge({s1, s1});
  const SimplicialMap& g = w.legs[1];
  auto from = mapping_space(s1, s1, 1);
  auto to = mapping_space(s1, w.space, 1);
  const LevelMap gt = tabulate_map(*from.ez_target, *to.ez_target, g);
  const LevelMap induced = postcompose(from, to, gt);
  CHECK(check_level_map(from.table, to.table, induced).empty());
}

TEST_CASE("homotopy classes and rho") {
  CHECK(homotopy_classes(mapping_space(sphere(0), sphere(0), 1).table).count() == 2);
  CHECK(homotopy_classes(mapping_space(sphere(1), point(), 1).table).count() == 1);
  auto s1s1 = mapping_space(sphere(1), sphere(1), 1);
  auto classes = homotopy_classes(s1s1.table);
  CHECK(classes.count() == 2);
  for (const auto& [ends, list] : classes.witnesses) CHECK(ends.first == ends.second);
  // Order independence: relabel level 0 and level 1 and recompute.
  TruncatedObject t = rho(s1s1.table);
  TruncatedObject rev = t;
  for (Index x = 0; x < t.k1; ++x) {
    rev.d0[t.k1 - 1 - x] = t.k0 - 1 - t.d0[x];
    rev.d1[t.k1 - 1 - x] = t.k0 - 1 - t.d1[x];
  }
  auto rc = homotopy_classes(rev);
  for (Index f = 0; f < t.k0; ++f) {
    for (Index g = 0; g < t.k0; ++g) {
      CHECK((classes.class_of[f] == classes.class_of[g]) == (rc.class_of[t.k0 - 1 - f] == rc.class_of[t.k0 - 1 - g]));
    }
  }

  auto r1 = rho(*sphere(1));
  CHECK(r1.k0 == 1);
  CHECK(r1.k1 == 2);
  auto rd = rho(*standard_simplex(1));
  CHECK(rd.k0 == 2);
  CHECK(rd.k1 == 3);
  CHECK(rho(s1s1.table).k0 == 2);
}

TEST_CASE("suspension against loops") {
  for (const auto& a : {sphere(0), sphere(1)}) {
    for (const auto& y : {sphere(1), sphere(2)}) {
      auto r = verify_sigma_omega(a, y, 1);
      REQUIRE(r.levels.size() == 2);
      CHECK(r.levels[0].bijective());
      CHECK(r.levels[1].bijective());
    }
  }
  auto trivial = verify_sigma_omega(sphere(1), point(), 1);
  CHECK(trivial.levels[0].left == 1);
  CHECK(trivial.levels[0].right == 1);
  auto s0 = verify_sigma_omega(sphere(0), sphere(0), 1);
  CHECK(s0.levels[0].left == 1);
  CHECK(s0.bijective());
}
